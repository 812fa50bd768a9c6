// command-line surface over the exact/numeric computation modules; every
// number printed here is produced by a library call, never computed locally
#include "qm/trace.hpp"
#include "qm/qcomb.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

using namespace qm;
using json = nlohmann::ordered_json;

namespace {

std::string num15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string cplx15(Cplx v) {
    if (std::abs(v.imag()) < 1e-300) return num15(v.real());
    return num15(v.real()) + (v.imag() < 0 ? "" : "+") + num15(v.imag()) + "i";
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw CLI::ValidationError("not a rational: " + s);
    r.canonicalize();
    return r;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
    return out;
}

// "0.2i,0.1i" -> purely imaginary hbar values
std::vector<Cplx> parse_hbar_list(const std::string& s) {
    std::vector<Cplx> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.back() != 'i')
            throw CLI::ValidationError("hbar must be imaginary, e.g. 0.2i: " + tok);
        out.push_back(Cplx(0, std::stod(tok.substr(0, tok.size() - 1))));
    }
    return out;
}

void emit(const json& rows, const std::vector<std::string>& columns,
          const std::string& format, const std::string& out_path) {
    std::ostringstream os;
    if (format == "csv") {
        for (size_t i = 0; i < columns.size(); ++i)
            os << (i ? "," : "") << columns[i];
        os << "\n";
        for (auto& row : rows) {
            for (size_t i = 0; i < columns.size(); ++i) {
                const auto& v = row.at(columns[i]);
                os << (i ? "," : "")
                   << (v.is_string() ? v.get<std::string>() : v.dump());
            }
            os << "\n";
        }
    } else {
        for (auto& row : rows) os << row.dump() << "\n";
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << os.str();
    } else {
        FILE* f = std::fopen(out_path.c_str(), "w");
        if (!f) throw CLI::ValidationError("cannot open " + out_path);
        std::fputs(os.str().c_str(), f);
        std::fclose(f);
    }
}

StandardFormSum named_element(const std::string& name) {
    if (name == "unit") return {unit_element(1)};
    // "nu,mu[,index]": genus-1 basis element
    std::stringstream ss(name);
    std::string tok;
    std::vector<long> v;
    while (std::getline(ss, tok, ',')) v.push_back(std::stol(tok));
    if (v.size() < 2 || v.size() > 3)
        throw CLI::ValidationError("element: unit or nu,mu[,index]");
    StandardFormElement e;
    e.genus = 1;
    e.nu = {v[0]};
    e.mu = {v[1]};
    auto basis = invariant_functionals(e.space());
    size_t idx = v.size() == 3 ? (size_t)v[2] : 0;
    if (idx >= basis.size())
        throw CLI::ValidationError("element: no invariant with that index");
    e.phi = basis[idx];
    return {e};
}

// ---- named identity suites -------------------------------------------------

bool check_ybe() {
    for (auto fs : {FactorList{{1, false}, {1, false}, {1, false}},
                    FactorList{{1, false}, {1, false}, {2, false}}}) {
        long d0 = factor_dim(fs[0]), d1 = factor_dim(fs[1]), d2 = factor_dim(fs[2]);
        auto B01 = [&](const ModuleFactor& a, const ModuleFactor& b, long post) {
            return braiding(a, b, true).kron(Mat::identity(post));
        };
        auto B12 = [&](const ModuleFactor& a, const ModuleFactor& b, long pre) {
            return Mat::identity(pre).kron(braiding(a, b, true));
        };
        Mat lhs = B12(fs[0], fs[1], d2) * B01(fs[0], fs[2], d1) * B12(fs[1], fs[2], d0);
        Mat rhs = B01(fs[1], fs[2], d0) * B12(fs[0], fs[2], d1) * B01(fs[0], fs[1], d2);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool check_abrr() {
    for (long a = 1; a <= 2; ++a)
        for (long b = 1; b <= 2; ++b) {
            Mat J = fusion_matrix(a, b);
            long da = a + 1, db = b + 1;
            auto wb = weight_table({{b, false}});
            Mat conj(da * db, da * db);
            for (long i = 0; i < da; ++i)
                for (long j = 0; j < db; ++j)
                    for (long ip = 0; ip < da; ++ip)
                        for (long jp = 0; jp < db; ++jp) {
                            const RF& x = J.at(i * db + j, ip * db + jp);
                            if (x.is_zero()) continue;
                            long w = wb[(size_t)jp], d = wb[(size_t)j] - w;
                            conj.at(i * db + j, ip * db + jp) =
                                RF::t_power(d / 2) * RF::q_power(d) *
                                RF::s_power(-4 * d * w - 2 * d * d) * x;
                        }
            Mat F1 = factor_action(Gen::F, {a, false});
            Mat E2 = factor_action(Gen::E, {b, false});
            Mat R021 = Mat::identity(da * db);
            Mat Fn = Mat::identity(da), En = Mat::identity(db);
            for (long n = 1;; ++n) {
                Fn = Fn * F1;
                En = En * E2;
                if (Fn.is_zero() || En.is_zero()) break;
                R021 = R021 + fusion_coeff(n) * Fn.kron(En);
            }
            if (!(J == R021 * conj)) return false;
        }
    return true;
}

bool check_qqv() {
    for (long m = 0; m <= 3; ++m)
        for (long k = 0; k <= m; ++k) {
            long w = m - 2 * k;
            RF lhs = q_scalar(m, k).subst_t(RF::q_power(-4) * RF::t_power(-1)) *
                     q_scalar(m, k).subst_t(RF::t_power(1) * RF::q_power(2 * w));
            if (!(lhs == RF::s_power(2 * w * w) * RF::q_power(w) * ribbon_scalar(m)))
                return false;
        }
    return true;
}

bool check_ajja() {
    long a = 1, b = 1;
    Mat J = fusion_matrix(a, b);
    Mat lhs = delta_dynamical_weyl(a, b) * J;
    Mat A2 = Mat::identity(a + 1).kron(dynamical_weyl(b));
    Mat Aa = dynamical_weyl(a);
    auto wb = weight_table({{b, false}});
    long da = a + 1, db = b + 1;
    Mat A1s(da * db, da * db);
    for (long j = 0; j < db; ++j) {
        Mat shifted = shift_lambda(Aa, -wb[(size_t)j]);
        for (long i = 0; i < da; ++i)
            for (long ip = 0; ip < da; ++ip)
                if (!shifted.at(ip, i).is_zero())
                    A1s.at(ip * db + j, i * db + j) = shifted.at(ip, i);
    }
    return lhs == weyl_flip_lambda(J) * A2 * A1s;
}

bool check_qsaqa() {
    for (long m = 2; m <= 4; m += 2) {
        long j = m / 2;
        RF A0 = dynamical_weyl(m).at(j, j);
        RF Qw = q_scalar(m, j).subst_t(RF::q_power(-4) * RF::t_power(-1));
        if (!(q_scalar(m, j) == A0 * Qw * A0)) return false;
    }
    return true;
}

bool check_hfcrf() {
    StandardFormElement e;
    e.genus = 1;
    e.nu = {2};
    e.mu = {0};
    e.phi = invariant_functionals(e.space())[0];
    long lambda = 4;
    return qdim_rf(lambda) * cartwheel_trace(e, lambda) ==
           r_function(e).subst_t_spow(8 * lambda);
}

bool check_cyclicity() {
    std::vector<StandardFormElement> es;
    for (long nu : {0L, 2L})
        for (long mu : {0L, 2L}) {
            StandardFormElement e;
            e.genus = 1;
            e.nu = {nu};
            e.mu = {mu};
            e.phi = invariant_functionals(e.space())[0];
            es.push_back(e);
        }
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i; j < es.size(); ++j) {
            RF ab = h_functional(algebra_product(StandardFormSum{es[i]},
                                                 StandardFormSum{es[j]}));
            RF ba = h_functional(algebra_product(StandardFormSum{es[j]},
                                                 StandardFormSum{es[i]}));
            if (!(ab == ba)) return false;
        }
    return true;
}

bool check_weyl() {
    RF flip = RF::q_power(-4) * RF::t_power(-1);
    for (long nu : {0L, 2L})
        for (long mu : {0L, 2L}) {
            StandardFormElement e;
            e.genus = 1;
            e.nu = {nu};
            e.mu = {mu};
            for (auto& b : invariant_functionals(e.space())) {
                e.phi = b;
                RF r = r_function(e);
                if (!(r == r.subst_t(flip))) return false;
            }
        }
    return true;
}

bool check_torus_cyclicity() {
    for (long m = -2; m <= 2; ++m)
        for (long n = -2; n <= 2; ++n)
            for (long a = -2; a <= 2; ++a)
                for (long b = -2; b <= 2; ++b) {
                    auto x = torus_monomial(m, n), y = torus_monomial(a, b);
                    if (!(quantum_torus_trace(quantum_torus_product(x, y)) ==
                          quantum_torus_trace(quantum_torus_product(y, x))))
                        return false;
                }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum-trace and volume-series computations"};
    app.require_subcommand(1);
    std::string format = "json", out_path = "-";
    app.add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", out_path, "output path, - for stdout");

    // verlinde
    auto* sv = app.add_subcommand("verlinde", "conformal-block counts, both routes");
    int vg = 1, vk = 1;
    std::string vl = "all";
    sv->add_option("--g", vg, "genus")->required();
    sv->add_option("--k", vk, "level")->required();
    sv->add_option("--l", vl, "even weight or 'all'");

    // witten
    auto* sw = app.add_subcommand("witten", "symplectic volume, exact and truncated");
    int wg = 1;
    std::string wx;
    long wn = 100000;
    sw->add_option("--g", wg, "genus")->required();
    sw->add_option("--x", wx, "conjugacy parameters, comma-separated")->required();
    sw->add_option("--nmax", wn, "truncation for the direct sum");

    // qvolume
    auto* sq = app.add_subcommand("qvolume", "deformed volume series");
    int qg = 1;
    std::string qx;
    double qq = 0.5, qtol = 1e-9;
    sq->add_option("--g", qg, "genus")->required();
    sq->add_option("--x", qx, "conjugacy parameters")->required();
    sq->add_option("--q", qq, "deformation parameter in (0,1)")->required();
    sq->add_option("--tol", qtol, "absolute tail tolerance");

    // asym
    auto* sa = app.add_subcommand("asym", "series vs asymptotic expansion");
    int ag = 1;
    std::string ax, ah = "0.2i,0.1i,0.05i";
    sa->add_option("--g", ag, "genus")->required();
    sa->add_option("--x", ax, "conjugacy parameters")->required();
    sa->add_option("--hbar", ah, "imaginary hbar values");

    // fusion
    auto* sf = app.add_subcommand("fusion", "dump the J / Q / A operators");
    std::string fop = "J";
    long fa = 1, fb = 1, fm = 1;
    sf->add_option("--op", fop, "J, Q or A")->check(CLI::IsMember({"J", "Q", "A"}));
    sf->add_option("--a", fa, "first weight (J)");
    sf->add_option("--b", fb, "second weight (J)");
    sf->add_option("--m", fm, "module weight (Q, A)");

    // trace
    auto* st = app.add_subcommand("trace", "q-trace of a standard-form element");
    std::string tf = "unit", tx = "1/3";
    double tq = 0.5, ttol = 1e-10;
    st->add_option("--f", tf, "unit or nu,mu[,index]");
    st->add_option("--x", tx, "conjugacy parameter");
    st->add_option("--q", tq, "deformation parameter in (0,1)");
    st->add_option("--tol", ttol, "tail tolerance");

    // torus
    auto* so = app.add_subcommand("torus", "quantum-torus product and trace");
    std::string oa = "0,0", ob = "0,0";
    so->add_option("--a", oa, "first monomial m,n");
    so->add_option("--b", ob, "second monomial m,n");

    // check
    auto* sc = app.add_subcommand("check", "named identity suites");
    std::string suite;
    sc->add_option("suite", suite, "suite name or 'all'")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sv) {
            if (vk < 1) throw CLI::ValidationError("k must be a positive integer");
            std::vector<int> ls;
            if (vl == "all") {
                for (int l = 0; l <= 2 * vk; l += 2) ls.push_back(l);
            } else {
                int l = std::stoi(vl);
                if (l % 2 != 0 || l < 0 || l > 2 * vk)
                    throw CLI::ValidationError("l must be even with 0 <= l <= 2k");
                ls.push_back(l);
            }
            json rows = json::array();
            bool all_equal = true;
            for (int l : ls) {
                SurfaceSignature sig{vg, 1};
                LevelWeight lw{vk, {l}};
                long long direct = verlinde_sum_direct(sig, lw);
                Rat residue = verlinde_residue(sig, lw);
                bool eq = Rat((long)direct) == residue;
                all_equal = all_equal && eq;
                rows.push_back({{"l", l},
                                {"direct", std::to_string(direct)},
                                {"residue", residue.get_str()},
                                {"equal", eq}});
            }
            emit(rows, {"l", "direct", "residue", "equal"}, format, out_path);
            return all_equal ? 0 : 1;
        }
        if (*sw) {
            auto xs = parse_rat_list(wx);
            SurfaceSignature sig{wg, (int)xs.size()};
            Rat exact = witten_volume(sig, xs);
            Cplx approx = witten_direct_truncated(sig, xs, wn);
            json rows = json::array();
            rows.push_back({{"g", wg},
                            {"x", wx},
                            {"exact", exact.get_str()},
                            {"truncated", cplx15(approx)},
                            {"difference", num15(std::abs(approx - Cplx(rat_to_double(exact), 0)))}});
            emit(rows, {"g", "x", "exact", "truncated", "difference"}, format, out_path);
            return 0;
        }
        if (*sq) {
            auto xs = parse_rat_list(qx);
            SurfaceSignature sig{qg, (int)xs.size()};
            Cplx v = t_series(sig, xs, Cplx(qq, 0), qtol);
            json rows = json::array();
            rows.push_back({{"g", qg},
                            {"x", qx},
                            {"q", num15(qq)},
                            {"tol", num15(qtol)},
                            {"value", cplx15(v)}});
            emit(rows, {"g", "x", "q", "tol", "value"}, format, out_path);
            return 0;
        }
        if (*sa) {
            auto xs = parse_rat_list(ax);
            if (auto witness = is_special(xs)) {
                std::ostringstream msg;
                msg << "special x: eps = (";
                for (size_t i = 0; i < witness->size(); ++i)
                    msg << (i ? "," : "") << ((*witness)[i] > 0 ? "+" : "-");
                msg << ") pairs to an integer";
                std::cerr << msg.str() << "\n";
                return 2;
            }
            SurfaceSignature sig{ag, (int)xs.size()};
            auto expansion = t_asymptotic(sig, xs);
            json rows = json::array();
            double prev = -1;
            bool decreasing = true;
            for (Cplx hbar : parse_hbar_list(ah)) {
                Cplx q = std::exp(Cplx(0, M_PI) * hbar);
                Cplx series = t_series(sig, xs, q, 1e-13);
                Cplx asym = expansion.eval(hbar);
                double diff = std::abs(series - asym);
                if (prev > 0 && diff >= prev) decreasing = false;
                json row = {{"hbar", num15(hbar.imag()) + "i"},
                            {"series", cplx15(series)},
                            {"asymptotic", cplx15(asym)},
                            {"difference", num15(diff)}};
                if (prev > 0) row["decay_log_ratio"] = num15(std::log(prev / diff));
                prev = diff;
                rows.push_back(row);
            }
            emit(rows, {"hbar", "series", "asymptotic", "difference"}, format, out_path);
            return decreasing ? 0 : 1;
        }
        if (*sf) {
            Mat op = fop == "J"   ? fusion_matrix(fa, fb)
                     : fop == "Q" ? q_operator(fm)
                                  : dynamical_weyl(fm);
            json rows = json::array();
            for (long i = 0; i < op.rows(); ++i)
                for (long j = 0; j < op.cols(); ++j)
                    if (!op.at(i, j).is_zero())
                        rows.push_back({{"row", i},
                                        {"col", j},
                                        {"entry", op.at(i, j).to_string()}});
            emit(rows, {"row", "col", "entry"}, format, out_path);
            return 0;
        }
        if (*st) {
            TraceSeriesConfig cfg{Cplx(tq, 0), {parse_rat(tx)}, ttol, 400};
            auto res = trace_q_series(named_element(tf), cfg);
            json rows = json::array();
            rows.push_back({{"f", tf},
                            {"x", tx},
                            {"q", num15(tq)},
                            {"value", cplx15(res.value)},
                            {"terms", res.terms},
                            {"route", res.route},
                            {"normalization", res.normalization}});
            emit(rows, {"f", "x", "q", "value", "terms", "route", "normalization"},
                 format, out_path);
            return 0;
        }
        if (*so) {
            auto pa = parse_rat_list(oa), pb = parse_rat_list(ob);
            if (pa.size() != 2 || pb.size() != 2)
                throw CLI::ValidationError("monomials are m,n pairs");
            auto a = torus_monomial(pa[0].get_num().get_si(), pa[1].get_num().get_si());
            auto b = torus_monomial(pb[0].get_num().get_si(), pb[1].get_num().get_si());
            auto ab = quantum_torus_product(a, b);
            json rows = json::array();
            for (auto& [mn, c] : ab.coeff)
                rows.push_back({{"m", mn.first},
                                {"n", mn.second},
                                {"coefficient", c.to_string()}});
            rows.push_back({{"m", "trace"},
                            {"n", ""},
                            {"coefficient", quantum_torus_trace(ab).to_string()}});
            emit(rows, {"m", "n", "coefficient"}, format, out_path);
            return 0;
        }
        if (*sc) {
            std::vector<std::pair<std::string, bool (*)()>> suites = {
                {"ybe", check_ybe},       {"abrr", check_abrr},
                {"qqv", check_qqv},       {"ajja", check_ajja},
                {"qsaqa", check_qsaqa},   {"hfcrf", check_hfcrf},
                {"cyclicity", check_cyclicity}, {"weyl", check_weyl},
                {"torus", check_torus_cyclicity}};
            json rows = json::array();
            int failures = 0;
            bool found = false;
            for (auto& [name, fn] : suites) {
                if (suite != "all" && suite != name) continue;
                found = true;
                bool ok = fn();
                if (!ok) ++failures;
                rows.push_back({{"suite", name}, {"pass", ok}});
            }
            if (!found) {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            emit(rows, {"suite", "pass"}, format, out_path);
            return failures == 0 ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
