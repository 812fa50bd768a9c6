#include "qm/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qm {

long Poly::min_s() const {
    long m = 0;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (first || k.es < m) m = k.es;
        first = false;
    }
    return m;
}

long Poly::max_s() const {
    long m = 0;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (first || k.es > m) m = k.es;
        first = false;
    }
    return m;
}

long Poly::min_t() const {
    return terms_.empty() ? 0 : terms_.begin()->first.et;
}

long Poly::max_t() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.et;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) {
            Mono k{ka.es + kb.es, ka.et + kb.et};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                Rat p = ca * cb;
                if (p != 0) r.terms_[k] = p;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw std::domain_error("Poly::pow: negative exponent");
    Poly acc(Rat(1));
    Poly b = *this;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Poly Poly::shifted(long es, long et) const {
    Poly r;
    for (auto& [k, c] : terms_) r.terms_[Mono{k.es + es, k.et + et}] = c;
    return r;
}

Poly Poly::bar() const {
    Poly r;
    for (auto& [k, c] : terms_) r.terms_[Mono{-k.es, -k.et}] = c;
    return r;
}

Poly Poly::subst_t_spow(long k) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        Poly term = monomial(c, m.es + k * m.et, 0);
        r += term;
    }
    return r;
}

Poly Poly::t_coeff(long j) const {
    Poly r;
    for (auto& [m, c] : terms_)
        if (m.et == j) r.terms_[Mono{m.es, 0}] = c;
    return r;
}

Cplx Poly::eval(Cplx s, Cplx t) const {
    Cplx acc(0, 0);
    for (auto& [k, c] : terms_)
        acc += rat_to_double(c) * std::pow(s, (double)k.es) * std::pow(t, (double)k.et);
    return acc;
}

Rat Poly::lowest_coeff() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << rat_to_string(c) << ")";
        if (k.es) os << "*s^" << k.es;
        if (k.et) os << "*t^" << k.et;
    }
    return os.str();
}

// ---------- dense univariate helpers ----------

namespace up {

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const UPoly& p) { return p.empty(); }

long deg(const UPoly& p) { return (long)p.size() - 1; }

UPoly add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPoly scale(const UPoly& a, const Rat& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.empty()) throw std::domain_error("up::divmod: division by zero");
    r = a;
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
    Rat lb = b.back();
    while (r.size() >= b.size()) {
        Rat c = r.back() / lb;
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
        if (r.empty()) break;
        if (r.size() > shift + b.size() - 1) r.resize(shift + b.size() - 1); // guard (cannot happen)
    }
    trim(q);
}

UPoly gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat l = a.back();
        for (auto& c : a) c /= l;
    }
    return a;
}

UPoly div_exact(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divmod(a, b, q, r);
    if (!r.empty()) throw std::domain_error("up::div_exact: not divisible");
    return q;
}

} // namespace up

// ---------- bivariate gcd / exact division ----------

namespace {

// view of a (non-Laurent) polynomial as a dense vector of s-polynomials by t-degree
std::vector<up::UPoly> by_t(const Poly& p) {
    std::vector<up::UPoly> v((size_t)(p.max_t() + 1));
    for (auto& [k, c] : p.terms()) {
        auto& u = v[(size_t)k.et];
        if ((long)u.size() <= k.es) u.resize((size_t)k.es + 1, Rat(0));
        u[(size_t)k.es] = c;
    }
    for (auto& u : v) up::trim(u);
    return v;
}

Poly from_by_t(const std::vector<up::UPoly>& v) {
    Poly p;
    for (size_t j = 0; j < v.size(); ++j)
        for (size_t i = 0; i < v[j].size(); ++i)
            if (v[j][i] != 0) p += Poly::monomial(v[j][i], (long)i, (long)j);
    return p;
}

long tdeg(const std::vector<up::UPoly>& v) {
    long d = (long)v.size() - 1;
    while (d >= 0 && up::is_zero(v[(size_t)d])) --d;
    return d;
}

up::UPoly content_s(const std::vector<up::UPoly>& v) {
    up::UPoly g;
    for (auto& u : v)
        if (!up::is_zero(u)) g = up::gcd(g, u);
    return g;
}

std::vector<up::UPoly> div_content(const std::vector<up::UPoly>& v, const up::UPoly& c) {
    std::vector<up::UPoly> r = v;
    for (auto& u : r)
        if (!up::is_zero(u)) u = up::div_exact(u, c);
    return r;
}

// pseudo-remainder of a by b in Q[s][t] (t-degree of a >= that of b)
std::vector<up::UPoly> prem_t(std::vector<up::UPoly> a, const std::vector<up::UPoly>& b) {
    long db = tdeg(b);
    const up::UPoly& lb = b[(size_t)db];
    long da = tdeg(a);
    while (da >= db) {
        up::UPoly la = a[(size_t)da];
        // a <- lb*a - la * t^{da-db} * b
        for (long j = 0; j <= da; ++j) a[(size_t)j] = up::mul(a[(size_t)j], lb);
        for (long j = 0; j <= db; ++j) {
            long idx = j + da - db;
            a[(size_t)idx] = up::sub(a[(size_t)idx], up::mul(la, b[(size_t)j]));
        }
        long nd = tdeg(a);
        if (nd == da) throw std::logic_error("prem_t: degree did not drop");
        da = nd;
    }
    a.resize((size_t)std::max<long>(da + 1, 0));
    return a;
}

// strip the Laurent monomial content: p = s^a t^b * poly with min exponents 0
Poly strip_mono(const Poly& p) {
    if (p.is_zero()) return p;
    return p.shifted(-p.min_s(), -p.min_t());
}

Poly normalize_lowest(const Poly& p) {
    if (p.is_zero()) return p;
    Rat c = p.lowest_coeff();
    Poly r = p;
    r *= Rat(1) / c;
    return r;
}

} // namespace

Poly poly_gcd(const Poly& a0, const Poly& b0) {
    if (a0.is_zero()) return normalize_lowest(strip_mono(b0));
    if (b0.is_zero()) return normalize_lowest(strip_mono(a0));
    Poly a = strip_mono(a0), b = strip_mono(b0);
    if (!a.has_t() && !b.has_t()) {
        auto va = by_t(a), vb = by_t(b);
        up::UPoly g = up::gcd(va[0], vb[0]);
        Poly r;
        for (size_t i = 0; i < g.size(); ++i)
            if (g[i] != 0) r += Poly::monomial(g[i], (long)i, 0);
        return normalize_lowest(strip_mono(r));
    }
    auto va = by_t(a), vb = by_t(b);
    up::UPoly ca = content_s(va), cb = content_s(vb);
    auto pa = div_content(va, ca);
    auto pb = div_content(vb, cb);
    up::UPoly cont = up::gcd(ca, cb);
    // primitive Euclidean remainder sequence in t
    std::vector<up::UPoly> f = pa, g = pb;
    if (tdeg(f) < tdeg(g)) std::swap(f, g);
    while (true) {
        if (tdeg(g) < 0) break;
        auto r = prem_t(f, g);
        if (tdeg(r) < 0) {
            f = g;
            break;
        }
        up::UPoly cr = content_s(r);
        r = div_content(r, cr);
        f = g;
        g = r;
        if (tdeg(g) == 0) {
            // a nonzero s-polynomial remainder: primitive => the t-gcd is trivial
            f = {up::UPoly{Rat(1)}};
            break;
        }
    }
    Poly gp = from_by_t(f);
    Poly contp;
    for (size_t i = 0; i < cont.size(); ++i)
        if (cont[i] != 0) contp += Poly::monomial(cont[i], (long)i, 0);
    return normalize_lowest(strip_mono(contp * gp));
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_div_exact: division by zero");
    if (a.is_zero()) return Poly();
    // pull the monomial parts out so both operands are true polynomials
    long asf = a.min_s(), atf = a.min_t(), bsf = b.min_s(), btf = b.min_t();
    Poly A = a.shifted(-asf, -atf), B = b.shifted(-bsf, -btf);
    std::vector<up::UPoly> va = by_t(A), vb = by_t(B);
    long da = tdeg(va), db = tdeg(vb);
    if (db == 0) {
        // divide every t-coefficient by the s-polynomial
        std::vector<up::UPoly> q(va.size());
        for (size_t j = 0; j < va.size(); ++j)
            if (!up::is_zero(va[j])) q[j] = up::div_exact(va[j], vb[0]);
        return from_by_t(q).shifted(asf - bsf, atf - btf);
    }
    // long division in t over the fraction field Q(s); exactness of the overall
    // division guarantees every quotient coefficient clears its denominator
    struct FracS {
        up::UPoly n, d; // d nonzero
    };
    auto reduce = [](FracS& f) {
        if (up::is_zero(f.n)) {
            f.d = up::UPoly{Rat(1)};
            return;
        }
        up::UPoly g = up::gcd(f.n, f.d);
        if (up::deg(g) > 0 || (!g.empty() && g[0] != 1)) {
            f.n = up::div_exact(f.n, g);
            f.d = up::div_exact(f.d, g);
        }
        Rat l = f.d.back();
        for (auto& c : f.n) c /= l;
        for (auto& c : f.d) c /= l;
    };
    long dq = da - db;
    if (dq < 0) throw std::domain_error("poly_div_exact: not divisible (degree)");
    std::vector<FracS> rem(va.size());
    for (size_t j = 0; j < va.size(); ++j) rem[j] = FracS{va[j], up::UPoly{Rat(1)}};
    std::vector<FracS> quot((size_t)dq + 1, FracS{{}, up::UPoly{Rat(1)}});
    const up::UPoly& lb = vb[(size_t)db];
    for (long jq = dq; jq >= 0; --jq) {
        FracS c = rem[(size_t)(jq + db)];
        c.d = up::mul(c.d, lb);
        reduce(c);
        quot[(size_t)jq] = c;
        for (long j = 0; j <= db; ++j) {
            FracS& r = rem[(size_t)(j + jq)];
            // r -= c * vb[j]
            up::UPoly t1 = up::mul(c.n, vb[(size_t)j]);
            up::UPoly nn = up::sub(up::mul(r.n, c.d), up::mul(t1, r.d));
            r.n = nn;
            r.d = up::mul(r.d, c.d);
            reduce(r);
        }
    }
    for (auto& r : rem)
        if (!up::is_zero(r.n)) throw std::domain_error("poly_div_exact: nonzero remainder");
    std::vector<up::UPoly> q(quot.size());
    for (size_t j = 0; j < quot.size(); ++j) {
        if (up::is_zero(quot[j].n)) continue;
        if (up::deg(quot[j].d) != 0) throw std::domain_error("poly_div_exact: non-polynomial quotient");
        q[j] = up::scale(quot[j].n, Rat(1) / quot[j].d[0]);
    }
    return from_by_t(q).shifted(asf - bsf, atf - btf);
}

} // namespace qm
