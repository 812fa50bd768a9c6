#pragma once

#include "qm/rational.hpp"

#include <compare>
#include <map>
#include <vector>

namespace qm {

// Monomial s^es * t^et.  The deformation root s satisfies q = s^4 (so q^{1/4}
// and q^{1/2} are integer powers of s) and t = q^{2*lambda} carries the
// dynamical parameter.  Ordering is (t-degree, s-degree) ascending; the
// "lowest" term of a polynomial refers to this order.
struct Mono {
    long es = 0;
    long et = 0;
    bool operator==(const Mono&) const = default;
    std::strong_ordering operator<=>(const Mono& o) const {
        if (auto c = et <=> o.et; c != 0) return c;
        return es <=> o.es;
    }
};

class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) terms_[Mono{0, 0}] = c;
    }
    explicit Poly(long c) : Poly(Rat(c)) {}

    static Poly monomial(const Rat& c, long es, long et = 0) {
        Poly p;
        if (c != 0) terms_insert(p, Mono{es, et}, c);
        return p;
    }
    static Poly s_power(long e) { return monomial(Rat(1), e, 0); }
    static Poly t_power(long e) { return monomial(Rat(1), 0, e); }
    // q = s^4
    static Poly q_power(long e) { return monomial(Rat(1), 4 * e, 0); }

    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
    }
    // constant-term view; exact only when is_constant()
    Rat constant_value() const {
        auto it = terms_.find(Mono{0, 0});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat coeff(long es, long et = 0) const {
        auto it = terms_.find(Mono{es, et});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    long min_s() const; // 0 for the zero polynomial
    long max_s() const;
    long min_t() const;
    long max_t() const;
    bool has_t() const { return min_t() != 0 || max_t() != 0; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly pow(long e) const; // e >= 0

    // multiply by s^es t^et
    Poly shifted(long es, long et) const;

    // s -> s^{-1}, t -> t^{-1} (the bar involution on exponents)
    Poly bar() const;

    // t -> s^k (monomial substitution; used for t = q^{2n} specialization)
    Poly subst_t_spow(long k) const;

    // coefficient of t^j as a polynomial in s alone
    Poly t_coeff(long j) const;

    Cplx eval(Cplx s, Cplx t = Cplx(1, 0)) const;

    // lowest nonzero coefficient in the (t,s)-ascending term order
    Rat lowest_coeff() const;

    std::string to_string() const;

private:
    static void terms_insert(Poly& p, Mono m, const Rat& c) { p.terms_[m] = c; }
    std::map<Mono, Rat> terms_; // no zero coefficients stored
};

// gcd of the polynomial parts (well-defined up to a monomial and scalar; the
// result is normalized to have min s- and t-exponent 0 and lowest coefficient 1)
Poly poly_gcd(const Poly& a, const Poly& b);

// exact division a/b; throws if b does not divide a
Poly poly_div_exact(const Poly& a, const Poly& b);

// ---- dense univariate polynomials over Q (internal helpers, exposed for tests)

namespace up {
using UPoly = std::vector<Rat>; // coeff[i] of s^i, no trailing zeros

void trim(UPoly& p);
bool is_zero(const UPoly& p);
long deg(const UPoly& p); // -1 for zero
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Rat& c);
// division over the field Q: a = q*b + r
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly gcd(UPoly a, UPoly b); // monic
UPoly div_exact(const UPoly& a, const UPoly& b);
} // namespace up

} // namespace qm
