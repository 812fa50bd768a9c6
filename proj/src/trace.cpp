#include "qm/trace.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qm {

std::vector<long> r_pole_lambdas(const RF& r) {
    Poly den = r.den();
    den = den.shifted(-den.min_s(), -den.min_t());
    std::vector<long> out;
    if (!den.has_t()) return out;
    long jmax = (den.max_s() - den.min_s()) / 8 + 1;
    for (long j = -jmax; j <= jmax && den.has_t(); ++j) {
        Poly cand = Poly(Rat(1)) - Poly::monomial(Rat(1), 8 * j, 1); // 1 - q^{2j} t
        bool hit = false;
        for (;;) {
            try {
                den = poly_div_exact(den, cand);
                hit = true;
            } catch (...) {
                break;
            }
            den = den.shifted(-den.min_s(), -den.min_t());
        }
        if (hit) out.push_back(-j); // zero at t = q^{-2j}
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct TermData {
    const StandardFormElement* elem;
    RF r;
    std::set<long> poles;
    long color_max = 0;
};

long common_genus(const StandardFormSum& f) {
    if (f.empty()) return 1;
    long g = f[0].genus;
    for (auto& t : f)
        if (t.genus != g)
            throw std::invalid_argument("trace: mixed genus in a sum");
    return g;
}

/// H(e c_lambda) numerically.  The rational function agrees with the trace
// only once 2 lambda clears every edge color (below that the relevant hom
// spaces are truncated), so small lambda and the pole set go through the
// diagram route.
Cplx h_value(const TermData& td, long lambda, Cplx s, long genus) {
    Cplx t = std::pow(s, (double)(8 * lambda));
    if (2 * lambda >= td.color_max && td.poles.count(lambda) == 0) {
        Cplx den = RF(td.r.den()).eval(s, t);
        if (std::abs(den) > 1e-12) {
            Cplx qd = qdim_rf(lambda).eval(s);
            return std::pow(qd, (double)(1 - 2 * genus)) * td.r.eval(s, t);
        }
    }
    return cartwheel_trace(*td.elem, lambda).eval(s);
}

} // namespace

TraceResult trace_q_series(const StandardFormSum& f, const TraceSeriesConfig& cfg) {
    if (cfg.tolerance <= 0) throw std::invalid_argument("trace: tolerance must be > 0");
    if (cfg.x.size() != 1) throw std::invalid_argument("trace: one puncture expected");
    if (std::abs(cfg.q) <= 0 || std::abs(cfg.q) >= 1)
        throw std::invalid_argument("trace: need 0 < |q| < 1");
    long genus = common_genus(f);
    TraceResult res;
    res.special_x = is_special(cfg.x).has_value();
    res.normalization = "two-sided form = (-1)^(g-1) 2^g delta(x) (q-q^-1)^(1-2g) "
                        "* this series, g = " + std::to_string(genus);
    Cplx s = std::pow(cfg.q, 0.25);
    double x = rat_to_double(cfg.x[0]);
    std::vector<TermData> terms;
    long pole_max = -1;
    bool used_cartwheel = false, used_r = false;
    for (auto& e : f) {
        TermData td;
        td.elem = &e;
        td.r = r_function(e);
        for (long p : r_pole_lambdas(td.r)) {
            td.poles.insert(p);
            pole_max = std::max(pole_max, p);
        }
        for (long m : e.nu) td.color_max = std::max(td.color_max, m);
        for (long m : e.mu) td.color_max = std::max(td.color_max, m);
        pole_max = std::max(pole_max, (td.color_max + 1) / 2);
        terms.push_back(std::move(td));
    }
    Cplx acc(0, 0);
    long stall = 0, used = 0;
    for (long lambda = 0; lambda < cfg.max_terms; ++lambda) {
        Cplx h(0, 0);
        for (auto& td : terms) {
            bool diagram = td.poles.count(lambda) > 0 || 2 * lambda < td.color_max;
            (diagram ? used_cartwheel : used_r) = true;
            h += h_value(td, lambda, s, genus);
        }
        Cplx term = h * chi_su2(lambda, x);
        acc += term;
        ++used;
        if (lambda > pole_max &&
            std::abs(term) < cfg.tolerance * std::max(1.0, std::abs(acc)))
            ++stall;
        else
            stall = 0;
        if (stall >= 8) break;
    }
    res.value = acc;
    res.terms = used;
    res.route = used_cartwheel ? (used_r ? "mixed" : "cartwheel") : "r_function";
    return res;
}

TraceResult trace_q_series(const StandardFormElement& f, const TraceSeriesConfig& cfg) {
    return trace_q_series(StandardFormSum{f}, cfg);
}

Cplx trace_q(const StandardFormSum& f, const TraceSeriesConfig& cfg) {
    return trace_q_series(f, cfg).value;
}

Cplx trace_q(const StandardFormElement& f, const TraceSeriesConfig& cfg) {
    return trace_q_series(f, cfg).value;
}

Cplx trace_series_twosided(const StandardFormSum& f, const Rat& x, Cplx hbar,
                           double tol) {
    long genus = common_genus(f);
    Cplx q = std::exp(Cplx(0, M_PI) * hbar);
    Cplx s = std::exp(Cplx(0, M_PI / 4.0) * hbar);
    double xd = rat_to_double(x);
    RF r(Rat(0));
    for (auto& e : f) r = r + r_function(e);
    auto eval_term = [&](long n) -> Cplx {
        Cplx qn = std::pow(q, (double)n);
        Cplx d = qn - 1.0 / qn;
        Cplx t = std::pow(s, (double)(8 * (n - 1)));
        Cplx den = RF(r.den()).eval(s, t);
        if (std::abs(d) < 1e-12 || std::abs(den) < 1e-12)
            return Cplx(0, 0); // skipped per the finite-values convention
        Cplx e = std::exp(Cplx(0, 2 * M_PI) * (double)n * xd);
        return e * std::pow(d, (double)(1 - 2 * genus)) * r.eval(s, t);
    };
    Cplx acc = eval_term(0);
    long stall = 0;
    for (long n = 1; n < 100000; ++n) {
        Cplx term = eval_term(n) + eval_term(-n);
        acc += term;
        if (std::abs(term) < tol * std::max(1.0, std::abs(acc)))
            ++stall;
        else
            stall = 0;
        if (stall >= 8) break;
    }
    double sign = genus % 2 ? 1.0 : -1.0;
    return sign * std::pow(2.0, (double)genus) * acc;
}

AsymptoticExpansion trace_asymptotic(const StandardFormSum& f, const Rat& x) {
    ConjugacyParameter xs = {x};
    if (is_special(xs)) throw std::domain_error("trace_asymptotic: special x");
    long genus = common_genus(f);
    RF r(Rat(0));
    for (auto& e : f) r = r + r_function(e);
    AsymptoticExpansion out;
    auto poles = r_pole_lambdas(r);
    std::set<long> ms = {0}; // u = 0 is always in the pole set for g >= 1
    for (long p : poles) ms.insert(p + 1); // t-plane pole lambda -> u = 2 pi i (lambda+1)
    out.pole_set.assign(ms.begin(), ms.end());
    if (!r.has_t() && r.num().is_constant() && r.den().is_constant()) {
        Rat c = r.num().constant_value() / r.den().constant_value();
        SurfaceSignature sig{(int)genus, 1};
        AsymptoticExpansion base = t_asymptotic(sig, xs);
        for (auto& [e, co] : base.terms)
            if (c * co != 0) out.terms[e] = c * co;
        out.decay_note = base.decay_note + "; scaled by the constant R";
    } else {
        out.decay_note = "R depends on t: coefficients are rational in q; "
                         "use trace_asymptotic_eval for numeric values";
    }
    return out;
}

Cplx trace_asymptotic_eval(const StandardFormSum& f, const Rat& x, Cplx hbar) {
    ConjugacyParameter xs = {x};
    if (is_special(xs)) throw std::domain_error("trace_asymptotic_eval: special x");
    long genus = common_genus(f);
    RF r(Rat(0));
    for (auto& e : f) r = r + r_function(e);
    Cplx q = std::exp(Cplx(0, M_PI) * hbar);
    Cplx s = std::exp(Cplx(0, M_PI / 4.0) * hbar);
    double xd = rat_to_double(x);
    auto w = [&](Cplx u) -> Cplx {
        Cplx t = std::exp(hbar * u) / (q * q);
        Cplx half = std::exp(hbar * u / 2.0);
        return std::exp(xd * u) / (1.0 - std::exp(u)) * r.eval(s, t) *
               std::pow(half - 1.0 / half, (double)(1 - 2 * genus));
    };
    std::set<long> ms = {0};
    for (long p : r_pole_lambdas(r)) ms.insert(p + 1);
    // residues by trapezoid quadrature on small circles (spectrally accurate)
    const int N = 512;
    const double radius = 1.0;
    Cplx total(0, 0);
    for (long m : ms) {
        Cplx u0(0, 2 * M_PI * (double)m);
        Cplx resid(0, 0);
        for (int k = 0; k < N; ++k) {
            double th = 2 * M_PI * k / N;
            Cplx z = radius * std::exp(Cplx(0, th));
            resid += w(u0 + z) * z; // (1/2pi i) * w * dz, dz = i z dth
        }
        total += resid / (double)N;
    }
    double sign = genus % 2 ? 1.0 : -1.0;
    return sign * std::pow(2.0, (double)genus) * total;
}

Cplx multi_puncture_trace_unit(const SurfaceSignature& sig,
                               const ConjugacyParameter& x, Cplx q, double tol) {
    return tilde_series(sig, x, q, tol);
}

QuantumTorusElement torus_monomial(long m, long n) {
    QuantumTorusElement e;
    e.coeff[{m, n}] = RF(Rat(1));
    return e;
}

QuantumTorusElement quantum_torus_product(const QuantumTorusElement& a,
                                          const QuantumTorusElement& b) {
    QuantumTorusElement out;
    for (auto& [ma, ca] : a.coeff)
        for (auto& [mb, cb] : b.coeff) {
            // (U^m V^n)(U^a V^b) = q^{n a} U^{m+a} V^{n+b}
            RF c = ca * cb * RF::q_power(ma.second * mb.first);
            auto key = std::make_pair(ma.first + mb.first, ma.second + mb.second);
            auto it = out.coeff.find(key);
            if (it == out.coeff.end())
                out.coeff.emplace(key, c);
            else
                it->second = it->second + c;
        }
    for (auto it = out.coeff.begin(); it != out.coeff.end();)
        it = it->second.is_zero() ? out.coeff.erase(it) : std::next(it);
    return out;
}

RF quantum_torus_trace(const QuantumTorusElement& a) {
    auto it = a.coeff.find({0, 0});
    return it == a.coeff.end() ? RF(Rat(0)) : it->second;
}

} // namespace qm
