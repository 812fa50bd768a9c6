#pragma once

#include "qm/laurent.hpp"

namespace qm {

// Element of the rational-function field in s (and optionally t), kept in
// canonical form: numerator and denominator coprime as polynomials, the
// denominator a true polynomial with min exponents 0 whose lowest-order
// coefficient (in the (t,s)-ascending term order) equals 1.  Structural
// equality of canonical forms is field equality.
class RF {
public:
    RF() : num_(), den_(Rat(1)) {}
    RF(const Poly& n) : num_(n), den_(Rat(1)) {}
    RF(const Rat& c) : num_(c), den_(Rat(1)) {}
    explicit RF(long c) : num_(Rat(c)), den_(Rat(1)) {}
    RF(const Poly& n, const Poly& d) : num_(n), den_(d) { reduce(); }

    static RF s_power(long e) { return RF(Poly::s_power(e)); }
    static RF t_power(long e) { return RF(Poly::t_power(e)); }
    static RF q_power(long e) { return RF(Poly::q_power(e)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return *this == RF(Rat(1)); }
    bool has_t() const { return num_.has_t() || den_.has_t(); }

    RF operator-() const;
    friend RF operator+(const RF& a, const RF& b);
    friend RF operator-(const RF& a, const RF& b);
    friend RF operator*(const RF& a, const RF& b);
    friend RF operator/(const RF& a, const RF& b);
    RF& operator+=(const RF& o) { return *this = *this + o; }
    RF& operator-=(const RF& o) { return *this = *this - o; }
    RF& operator*=(const RF& o) { return *this = *this * o; }
    RF& operator/=(const RF& o) { return *this = *this / o; }
    bool operator==(const RF& o) const { return num_ == o.num_ && den_ == o.den_; }

    RF inverse() const;
    RF pow(long e) const;
    RF bar() const { return RF(num_.bar(), den_.bar()); }

    // t -> s^k; throws if the denominator vanishes identically afterwards
    RF subst_t_spow(long k) const;
    // t -> r(s,t) for a rational function r
    RF subst_t(const RF& r) const;

    Cplx eval(Cplx s, Cplx t = Cplx(1, 0)) const;

    std::string to_string() const;

private:
    void reduce();
    Poly num_, den_;
};

} // namespace qm
