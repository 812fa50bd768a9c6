#include "qm/ribbon.hpp"

#include "qm/qcomb.hpp"

#include <sstream>
#include <stdexcept>

namespace qm {

// ---------------------------------------------------------------------------
// diagram engine
// ---------------------------------------------------------------------------

namespace {

// in/out signature of a piece given the strands it consumes
void piece_interface(const Piece& p, const FactorList& avail, size_t pos,
                     const CouponLibrary& lib, FactorList& in, FactorList& out,
                     Mat& op) {
    auto take = [&](size_t n) {
        if (pos + n > avail.size())
            throw std::invalid_argument("diagram: slice consumes past the interface");
        return FactorList(avail.begin() + (long)pos, avail.begin() + (long)(pos + n));
    };
    switch (p.kind) {
    case PieceKind::Id:
        in = take(1);
        if (in[0].m != p.m || in[0].dual != p.dual)
            throw std::invalid_argument("diagram: identity strand color mismatch");
        out = in;
        op = Mat::identity(p.m + 1);
        return;
    case PieceKind::Cup:
        in = {};
        out = {{p.m, false}, {p.m, true}};
        op = coev(p.m);
        return;
    case PieceKind::CupStar:
        in = {};
        out = {{p.m, true}, {p.m, false}};
        op = coevp(p.m);
        return;
    case PieceKind::Cap:
        in = take(2);
        if (in[0].m != p.m || !in[0].dual || in[1].m != p.m || in[1].dual)
            throw std::invalid_argument("diagram: cap expects V* V");
        out = {};
        op = ev(p.m);
        return;
    case PieceKind::CapStar:
        in = take(2);
        if (in[0].m != p.m || in[0].dual || in[1].m != p.m || !in[1].dual)
            throw std::invalid_argument("diagram: cap* expects V V*");
        out = {};
        op = evp(p.m);
        return;
    case PieceKind::CrossPos:
    case PieceKind::CrossNeg:
        in = take(2);
        out = {in[1], in[0]};
        op = braiding(in[0], in[1], p.kind == PieceKind::CrossPos);
        return;
    case PieceKind::TwistPos:
    case PieceKind::TwistNeg:
        in = take(1);
        if (in[0].m != p.m)
            throw std::invalid_argument("diagram: twist strand color mismatch");
        out = in;
        op = (p.kind == PieceKind::TwistPos ? ribbon_scalar(p.m)
                                            : ribbon_scalar(p.m).inverse()) *
             Mat::identity(p.m + 1);
        return;
    case PieceKind::CouponRef: {
        auto it = lib.find(p.name);
        if (it == lib.end())
            throw std::invalid_argument("diagram: unknown coupon " + p.name);
        in = take(it->second.dom.size());
        if (in != it->second.dom)
            throw std::invalid_argument("diagram: coupon domain mismatch");
        out = it->second.cod;
        op = it->second.op;
        return;
    }
    }
    throw std::logic_error("diagram: unhandled piece");
}

} // namespace

Mat evaluate_diagram(const RibbonDiagram& d, const CouponLibrary& lib) {
    FactorList sig = d.bottom;
    Mat acc = Mat::identity(space_dim(sig));
    for (auto& slice : d.slices) {
        FactorList next;
        Mat slice_op(1, 1);
        slice_op.at(0, 0) = RF(Rat(1));
        size_t pos = 0;
        for (auto& p : slice) {
            FactorList in, out;
            Mat op;
            piece_interface(p, sig, pos, lib, in, out, op);
            pos += in.size();
            next.insert(next.end(), out.begin(), out.end());
            slice_op = slice_op.kron(op);
        }
        if (pos != sig.size())
            throw std::invalid_argument("diagram: slice leaves strands unconsumed");
        acc = slice_op * acc;
        sig = std::move(next);
    }
    return acc;
}

RibbonDiagram parse_diagram(const std::string& text, const FactorList& bottom) {
    RibbonDiagram d;
    d.bottom = bottom;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream toks(line);
        std::string tok;
        std::vector<Piece> slice;
        while (toks >> tok) {
            Piece p;
            auto arg = [&](size_t at) {
                size_t close = tok.find(')', at);
                if (close == std::string::npos)
                    throw std::invalid_argument("diagram token: " + tok);
                return tok.substr(at, close - at);
            };
            if (tok.rfind("id*(", 0) == 0) {
                p = {PieceKind::Id, std::stol(arg(4)), true, ""};
            } else if (tok.rfind("id(", 0) == 0) {
                p = {PieceKind::Id, std::stol(arg(3)), false, ""};
            } else if (tok.rfind("cup*(", 0) == 0) {
                p = {PieceKind::CupStar, std::stol(arg(5)), false, ""};
            } else if (tok.rfind("cup(", 0) == 0) {
                p = {PieceKind::Cup, std::stol(arg(4)), false, ""};
            } else if (tok.rfind("cap*(", 0) == 0) {
                p = {PieceKind::CapStar, std::stol(arg(5)), false, ""};
            } else if (tok.rfind("cap(", 0) == 0) {
                p = {PieceKind::Cap, std::stol(arg(4)), false, ""};
            } else if (tok == "X+") {
                p = {PieceKind::CrossPos, 0, false, ""};
            } else if (tok == "X-") {
                p = {PieceKind::CrossNeg, 0, false, ""};
            } else if (tok.rfind("tw+(", 0) == 0) {
                p = {PieceKind::TwistPos, std::stol(arg(4)), false, ""};
            } else if (tok.rfind("tw-(", 0) == 0) {
                p = {PieceKind::TwistNeg, std::stol(arg(4)), false, ""};
            } else if (tok.rfind("coupon(", 0) == 0) {
                p = {PieceKind::CouponRef, 0, false, arg(7)};
            } else {
                throw std::invalid_argument("diagram token: " + tok);
            }
            slice.push_back(p);
        }
        if (!slice.empty()) d.slices.push_back(std::move(slice));
    }
    return d;
}

// ---------------------------------------------------------------------------
// standard form
// ---------------------------------------------------------------------------

FactorList StandardFormElement::space() const {
    FactorList fs;
    for (long i = genus; i >= 1; --i) {
        fs.push_back({nu[(size_t)i - 1], true});
        fs.push_back({mu[(size_t)i - 1], true});
        fs.push_back({nu[(size_t)i - 1], false});
        fs.push_back({mu[(size_t)i - 1], false});
    }
    return fs;
}

StandardFormElement unit_element(long genus) {
    StandardFormElement e;
    e.genus = genus;
    e.nu.assign((size_t)genus, 0);
    e.mu.assign((size_t)genus, 0);
    e.phi = Mat(1, 1);
    e.phi.at(0, 0) = RF(Rat(1));
    return e;
}

std::vector<Mat> invariant_functionals(const FactorList& fs) {
    static std::map<std::vector<long>, std::vector<Mat>> cache;
    std::vector<long> key;
    for (auto& f : fs) key.push_back(f.dual ? -(f.m + 1) : f.m + 1);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto basis = hom_basis(fs, {});
    cache.emplace(std::move(key), basis);
    return basis;
}

// ---------------------------------------------------------------------------
// cartwheel route
// ---------------------------------------------------------------------------

RF intertwiner_pairing(const Mat& out_map, const Mat& in_map, long lambda, long m) {
    // scalar of (id (x) pairing)(out_map (x) id_V) in_map on V_lambda, where
    // out_map lands in V_lambda (x) V* and in_map in V_lambda (x) V
    long dl = lambda + 1, dv = m + 1;
    Mat c = Mat::identity(dl).kron(ev(m)) * out_map.kron(Mat::identity(dv)) * in_map;
    return c.at(0, 0);
}

namespace {

struct DualizedBases {
    std::vector<Mat> in;  // basis of Hom(V_l, V_l (x) V)
    std::vector<Mat> out; // dual basis of Hom(V_l, V_l (x) V*) for the pairing
};

DualizedBases dualized_bases(long m, long l) {
    static std::map<std::pair<long, long>, DualizedBases> cache;
    auto ck = std::make_pair(m, l);
    auto cit = cache.find(ck);
    if (cit != cache.end()) return cit->second;
    DualizedBases d;
    d.in = hom_basis({{l, false}}, {{l, false}, {m, false}});
    auto raw = hom_basis({{l, false}}, {{l, false}, {m, true}});
    if (d.in.size() != raw.size())
        throw std::logic_error("intertwiner spaces of unequal dimension");
    size_t n = d.in.size();
    if (n == 0) {
        cache.emplace(ck, d);
        return d;
    }
    Mat gram((long)n, (long)n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            gram.at((long)i, (long)k) = intertwiner_pairing(raw[k], d.in[i], l, m);
    Mat ginv = gram.inverse();
    for (size_t j = 0; j < n; ++j) {
        Mat o(raw[0].rows(), raw[0].cols());
        for (size_t k = 0; k < n; ++k)
            o = o + ginv.at((long)k, (long)j) * raw[k];
        d.out.push_back(std::move(o));
    }
    cache.emplace(ck, d);
    return d;
}

} // namespace

Mat xi_operator(long v, long w, long lambda) {
    long dl = lambda + 1, dv = v + 1, dw = w + 1;
    Mat total(dl * dv * dw * dv * dw, dl);
    auto A = dualized_bases(v, lambda);
    auto B = dualized_bases(w, lambda);
    for (size_t j = 0; j < A.in.size(); ++j)
        for (size_t k = 0; k < B.in.size(); ++k) {
            Mat x = B.in[k];                                      // V_l (x) W
            x = A.in[j].kron(Mat::identity(dw)) * x;              // V_l V W
            x = B.out[k].kron(Mat::identity(dv * dw)) * x;        // V_l W* V W
            x = A.out[j].kron(Mat::identity(dw * dv * dw)) * x;   // V_l V* W* V W
            total = total + x;
        }
    return total;
}

RF cartwheel_trace(const StandardFormElement& f, long lambda) {
    long dl = lambda + 1;
    Mat x = Mat::identity(dl);
    long tail = 1;
    for (long i = 1; i <= f.genus; ++i) {
        Mat xi = xi_operator(f.nu[(size_t)i - 1], f.mu[(size_t)i - 1], lambda);
        x = xi.kron(Mat::identity(tail)) * x;
        tail *= xi.rows() / dl;
    }
    Mat c = Mat::identity(dl).kron(f.phi) * x;
    return qdim_rf(lambda).pow(1 - 2 * f.genus) * c.at(0, 0);
}

// ---------------------------------------------------------------------------
// fusion-matrix route
// ---------------------------------------------------------------------------

RF r_function(const StandardFormElement& f) {
    for (long i = 0; i < f.genus; ++i)
        if (f.nu[(size_t)i] % 2 || f.mu[(size_t)i] % 2)
            return RF(Rat(0)); // empty zero-weight line
    FactorList fs = f.space();
    long dim = space_dim(fs);
    // the fused omega vector depends only on the coloring, not on phi
    static std::map<std::pair<std::vector<long>, std::vector<long>>,
                    std::vector<RF>> cache;
    auto ck = std::make_pair(f.nu, f.mu);
    auto it = cache.find(ck);
    if (it == cache.end()) {
        // omega: the zero-weight diagonal element, one index per factor
        long idx = 0;
        for (auto& fac : fs) idx = idx * factor_dim(fac) + fac.m / 2;
        RF scale(Rat(1));
        for (long i = 0; i < f.genus; ++i) {
            long n = f.nu[(size_t)i], m = f.mu[(size_t)i];
            scale = scale * (q_scalar(n, n / 2) * q_scalar(m, m / 2)).inverse();
        }
        std::vector<RF> w0((size_t)dim);
        w0[(size_t)idx] = scale;
        // apply the fusion blocks right to left without keeping them all
        for (size_t k = fs.size() - 1; k >= 1; --k) {
            FactorList tail(fs.begin() + (long)(k - 1), fs.end());
            Mat blk = fusion_bipartite(tail, 1);
            if (k > 1) {
                FactorList head(fs.begin(), fs.begin() + (long)(k - 1));
                blk = Mat::identity(space_dim(head)).kron(blk);
            }
            w0 = blk.apply(w0);
        }
        it = cache.emplace(std::move(ck), std::move(w0)).first;
    }
    const std::vector<RF>& w = it->second;
    RF r(Rat(0));
    for (long j = 0; j < dim; ++j)
        if (!w[(size_t)j].is_zero()) r = r + f.phi.at(0, j) * w[(size_t)j];
    return r;
}

RF h_functional(const StandardFormElement& f) { return cartwheel_trace(f, 0); }

RF cartwheel_trace(const StandardFormSum& f, long lambda) {
    RF acc(Rat(0));
    for (auto& t : f) acc = acc + cartwheel_trace(t, lambda);
    return acc;
}

RF r_function(const StandardFormSum& f) {
    RF acc(Rat(0));
    for (auto& t : f) acc = acc + r_function(t);
    return acc;
}

RF h_functional(const StandardFormSum& f) {
    RF acc(Rat(0));
    for (auto& t : f) acc = acc + h_functional(t);
    return acc;
}

// ---------------------------------------------------------------------------
// product
// ---------------------------------------------------------------------------

namespace {

// the strand of the upper element crosses over the lower one
const bool kUpperOverLower = true;

Mat move_braiding(const ModuleFactor& a, const ModuleFactor& b) {
    static std::map<std::tuple<long, bool, long, bool>, Mat> cache;
    auto key = std::make_tuple(a.m, a.dual, b.m, b.dual);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Mat out = braiding(a, b, kUpperOverLower);
    cache.emplace(key, out);
    return out;
}

// row (x) (id_pre (x) blk (x) id_post) for a rectangular block, mapping the
// middle slot from blk.rows() to blk.cols()
std::vector<RF> row_block(const std::vector<RF>& row, long pre, const Mat& blk,
                          long post) {
    long rin = blk.rows(), rout = blk.cols();
    std::vector<RF> out((size_t)(pre * rout * post));
    for (long p = 0; p < pre; ++p)
        for (long i = 0; i < rin; ++i)
            for (long q = 0; q < post; ++q) {
                const RF& r = row[(size_t)((p * rin + i) * post + q)];
                if (r.is_zero()) continue;
                for (long j = 0; j < rout; ++j) {
                    if (blk.at(i, j).is_zero()) continue;
                    size_t o = (size_t)((p * rout + j) * post + q);
                    out[o] = out[o] + r * blk.at(i, j);
                }
            }
    return out;
}

Mat incl_map(long a, long b, long c) {
    static std::map<std::tuple<long, long, long>, Mat> cache;
    auto key = std::make_tuple(a, b, c);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto h = hom_basis({{c, false}}, {{a, false}, {b, false}});
    if (h.size() != 1) throw std::logic_error("expected multiplicity one");
    cache.emplace(key, h[0]);
    return h[0];
}

Mat proj_map(long a, long b, long c) {
    static std::map<std::tuple<long, long, long>, Mat> cache;
    auto key = std::make_tuple(a, b, c);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto h = hom_basis({{a, false}, {b, false}}, {{c, false}});
    if (h.size() != 1) throw std::logic_error("expected multiplicity one");
    Mat p = h[0];
    RF n = (p * incl_map(a, b, c)).at(0, 0);
    p = n.inverse() * p;
    cache.emplace(key, p);
    return p;
}

// V_c* -> V_b* (x) V_a*: the projection transposed through the canonical
// identification of (V_a (x) V_b)* with V_b* (x) V_a*
Mat rev_transpose(const Mat& proj, long a, long b, long c) {
    Mat out((b + 1) * (a + 1), c + 1);
    for (long j = 0; j <= c; ++j)
        for (long ka = 0; ka <= a; ++ka)
            for (long kb = 0; kb <= b; ++kb)
                out.at(kb * (a + 1) + ka, j) = proj.at(j, ka * (b + 1) + kb);
    return out;
}

// V_c* -> V_a* (x) V_b*, crossing the upper strand over the lower
Mat dual_split(long a, long b, long c) {
    static std::map<std::tuple<long, long, long>, Mat> cache;
    auto key = std::make_tuple(a, b, c);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Mat rt = rev_transpose(proj_map(a, b, c), a, b, c);
    Mat out = braiding({b, true}, {a, true}, kUpperOverLower) * rt;
    cache.emplace(key, out);
    return out;
}

struct TaggedFactor {
    ModuleFactor f;
    bool upper; // belongs to the second (stacked-above) element
};

} // namespace

StandardFormSum algebra_product(const StandardFormElement& f,
                                const StandardFormElement& g) {
    if (f.genus != 1 || g.genus != 1)
        throw std::invalid_argument("algebra_product: genus 1 only");
    long nf = f.nu[0], mf = f.mu[0], ng = g.nu[0], mg = g.mu[0];

    // functional phi_f (x) phi_g on the f-block followed by the g-block
    Mat row0 = f.phi.kron(g.phi);
    std::vector<RF> row((size_t)row0.cols());
    for (long j = 0; j < row0.cols(); ++j) row[(size_t)j] = row0.at(0, j);

    // pull back through the regrouping braid: the split order
    // [nf* ng* mf* mg* nf ng mf mg] sorts to the f-block then the g-block,
    // every crossing passing a g-strand over an f-strand
    std::vector<TaggedFactor> sig = {
        {{nf, true}, false}, {{ng, true}, true}, {{mf, true}, false},
        {{mg, true}, true},  {{nf, false}, false}, {{ng, false}, true},
        {{mf, false}, false}, {{mg, false}, true}};
    struct Move {
        size_t pos;
        ModuleFactor a, b;
    };
    std::vector<Move> moves;
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t p = 0; p + 1 < sig.size(); ++p)
            if (sig[p].upper && !sig[p + 1].upper) {
                moves.push_back({p, sig[p].f, sig[p + 1].f});
                std::swap(sig[p], sig[p + 1]);
                changed = true;
            }
    }
    auto dim_range = [&](size_t from, size_t to) {
        long d = 1;
        for (size_t i = from; i < to; ++i) d *= factor_dim(sig[i].f);
        return d;
    };
    // sig is now the final order; replay the moves backwards, maintaining the
    // intermediate orders to size the identity blocks
    std::vector<std::vector<TaggedFactor>> stages;
    std::vector<TaggedFactor> cur = {
        {{nf, true}, false}, {{ng, true}, true}, {{mf, true}, false},
        {{mg, true}, true},  {{nf, false}, false}, {{ng, false}, true},
        {{mf, false}, false}, {{mg, false}, true}};
    stages.push_back(cur);
    for (auto& mv : moves) {
        std::swap(cur[mv.pos], cur[mv.pos + 1]);
        stages.push_back(cur);
    }
    for (size_t k = moves.size(); k-- > 0;) {
        auto& before = stages[k];
        auto& mv = moves[k];
        long pre = 1, post = 1;
        for (size_t i = 0; i < mv.pos; ++i) pre *= factor_dim(before[i].f);
        for (size_t i = mv.pos + 2; i < before.size(); ++i)
            post *= factor_dim(before[i].f);
        row = row_block(row, pre, move_braiding(mv.a, mv.b), post);
    }
    (void)dim_range;

    // distribute over the decompositions of the doubled edges, contracting
    // the four split/inclusion blocks one slot at a time
    long dnn = (nf + 1) * (ng + 1), dmm = (mf + 1) * (mg + 1);
    StandardFormSum out;
    for (long nu = std::labs(nf - ng); nu <= nf + ng; nu += 2)
        for (long mu = std::labs(mf - mg); mu <= mf + mg; mu += 2) {
            auto r = row_block(row, 1, dual_split(nf, ng, nu), dmm * dnn * dmm);
            r = row_block(r, nu + 1, dual_split(mf, mg, mu), dnn * dmm);
            r = row_block(r, (nu + 1) * (mu + 1), incl_map(nf, ng, nu), dmm);
            r = row_block(r, (nu + 1) * (mu + 1) * (nu + 1), incl_map(mf, mg, mu), 1);
            Mat phi(1, (long)r.size());
            for (size_t j = 0; j < r.size(); ++j) phi.at(0, (long)j) = r[j];
            if (phi.is_zero()) continue;
            StandardFormElement e;
            e.genus = 1;
            e.nu = {nu};
            e.mu = {mu};
            e.phi = std::move(phi);
            out.push_back(std::move(e));
        }
    return out;
}

StandardFormSum algebra_product(const StandardFormSum& f, const StandardFormSum& g) {
    StandardFormSum out;
    for (auto& a : f)
        for (auto& b : g) {
            auto terms = algebra_product(a, b);
            out.insert(out.end(), terms.begin(), terms.end());
        }
    return out;
}

std::map<std::pair<long, long>, std::vector<RF>>
canonical_coordinates(const StandardFormSum& f) {
    // accumulate the functionals per coloring, then expand in the basis
    std::map<std::pair<long, long>, Mat> acc;
    for (auto& t : f) {
        if (t.genus != 1)
            throw std::invalid_argument("canonical_coordinates: genus 1 only");
        auto key = std::make_pair(t.nu[0], t.mu[0]);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, t.phi);
        else
            it->second = it->second + t.phi;
    }
    std::map<std::pair<long, long>, std::vector<RF>> out;
    for (auto& [key, phi] : acc) {
        if (phi.is_zero()) continue;
        StandardFormElement probe;
        probe.genus = 1;
        probe.nu = {key.first};
        probe.mu = {key.second};
        auto basis = invariant_functionals(probe.space());
        // solve phi = sum_i x_i basis_i by Gaussian elimination on the
        // stacked rows; throws if phi is not in the span
        long n = (long)basis.size(), d = phi.cols();
        Mat sys(n + 1, d);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < d; ++j) sys.at(i, j) = basis[(size_t)i].at(0, j);
        std::vector<RF> x((size_t)n);
        Mat rhs = phi;
        for (long i = 0; i < n; ++i) {
            long lead = -1;
            for (long j = 0; j < d; ++j)
                if (!sys.at(i, j).is_zero()) { lead = j; break; }
            if (lead < 0) throw std::logic_error("degenerate functional basis");
            RF c = rhs.at(0, lead) / sys.at(i, lead);
            x[(size_t)i] = c;
            for (long j = 0; j < d; ++j)
                rhs.at(0, j) = rhs.at(0, j) - c * sys.at(i, j);
            // eliminate this basis row from the ones below
            for (long k = i + 1; k < n; ++k) {
                if (sys.at(k, lead).is_zero()) continue;
                RF fkl = sys.at(k, lead) / sys.at(i, lead);
                for (long j = 0; j < d; ++j)
                    sys.at(k, j) = sys.at(k, j) - fkl * sys.at(i, j);
            }
        }
        if (!rhs.is_zero())
            throw std::logic_error("functional outside the invariant span");
        bool nonzero = false;
        for (auto& c : x)
            if (!c.is_zero()) nonzero = true;
        if (nonzero) out.emplace(key, std::move(x));
    }
    return out;
}

StandardFormSum c_element(long lambda) {
    if (lambda == 0) return {unit_element(1)};
    if (lambda > 1) {
        // fusion recursion c_1 c_{l-1} = c_l + c_{l-2}
        StandardFormSum prod = algebra_product(c_element(1), c_element(lambda - 1));
        if (lambda >= 2)
            for (auto& t : c_element(lambda - 2)) {
                StandardFormElement neg = t;
                neg.phi = RF(Rat(-1)) * neg.phi;
                prod.push_back(std::move(neg));
            }
        return prod;
    }
    // lambda = 1: solve the trace pairing H(e_b x) = H(e_b c_1) over the
    // coloring support {0, 2} x {0, 2}
    std::vector<StandardFormElement> basis_elems;
    for (long nu : {0L, 2L})
        for (long mu : {0L, 2L}) {
            StandardFormElement probe;
            probe.genus = 1;
            probe.nu = {nu};
            probe.mu = {mu};
            for (auto& b : invariant_functionals(probe.space())) {
                StandardFormElement e = probe;
                e.phi = b;
                basis_elems.push_back(std::move(e));
            }
        }
    long n = (long)basis_elems.size();
    Mat sys(n, n), rhs(n, 1);
    for (long b = 0; b < n; ++b) {
        for (long a = 0; a < n; ++a)
            sys.at(b, a) = h_functional(algebra_product(basis_elems[(size_t)b],
                                                        basis_elems[(size_t)a]));
        rhs.at(b, 0) = cartwheel_trace(basis_elems[(size_t)b], lambda);
    }
    Mat x = sys.inverse() * rhs;
    StandardFormSum out;
    for (long a = 0; a < n; ++a) {
        if (x.at(a, 0).is_zero()) continue;
        StandardFormElement e = basis_elems[(size_t)a];
        e.phi = x.at(a, 0) * e.phi;
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace qm
