#include "qm/ratfunc.hpp"

namespace qm {

void RF::reduce() {
    if (den_.is_zero()) throw std::domain_error("RF: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    // make the denominator a true polynomial with min exponents 0, moving the
    // compensating monomial into the numerator
    num_ = num_.shifted(-den_.min_s(), -den_.min_t());
    den_ = den_.shifted(-den_.min_s(), -den_.min_t());
    // split the numerator's own monomial so gcd runs on polynomial parts
    long ns = num_.min_s(), nt = num_.min_t();
    Poly np = num_.shifted(-ns, -nt);
    Poly g = poly_gcd(np, den_);
    if (!g.is_constant()) {
        np = poly_div_exact(np, g);
        den_ = poly_div_exact(den_, g);
        num_ = np.shifted(ns - den_.min_s(), nt - den_.min_t());
        den_ = den_.shifted(-den_.min_s(), -den_.min_t());
    } else {
        num_ = np.shifted(ns, nt);
    }
    Rat c = den_.lowest_coeff();
    if (c != 1) {
        Rat inv = Rat(1) / c;
        num_ *= inv;
        den_ *= inv;
    }
}

RF RF::operator-() const {
    RF r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RF operator+(const RF& a, const RF& b) {
    return RF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RF operator-(const RF& a, const RF& b) {
    return RF(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RF operator*(const RF& a, const RF& b) { return RF(a.num_ * b.num_, a.den_ * b.den_); }

RF operator/(const RF& a, const RF& b) {
    if (b.is_zero()) throw std::domain_error("RF: division by zero");
    return RF(a.num_ * b.den_, a.den_ * b.num_);
}

RF RF::inverse() const {
    if (is_zero()) throw std::domain_error("RF: inverse of zero");
    return RF(den_, num_);
}

RF RF::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RF acc(Rat(1));
    RF b = *this;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

RF RF::subst_t_spow(long k) const {
    Poly n = num_.subst_t_spow(k);
    Poly d = den_.subst_t_spow(k);
    if (d.is_zero()) throw std::domain_error("RF::subst_t_spow: denominator vanishes");
    return RF(n, d);
}

RF RF::subst_t(const RF& r) const {
    auto subst_poly = [&r](const Poly& p) -> RF {
        long lo = p.min_t(), hi = p.max_t();
        RF acc;
        for (long j = lo; j <= hi; ++j) {
            Poly cj = p.t_coeff(j);
            if (cj.is_zero()) continue;
            acc += RF(cj) * r.pow(j);
        }
        return acc;
    };
    RF d = subst_poly(den_);
    if (d.is_zero()) throw std::domain_error("RF::subst_t: denominator vanishes");
    return subst_poly(num_) / d;
}

Cplx RF::eval(Cplx s, Cplx t) const {
    Cplx d = den_.eval(s, t);
    if (std::abs(d) == 0.0) throw std::domain_error("RF::eval: denominator zero");
    return num_.eval(s, t) / d;
}

std::string RF::to_string() const {
    if (den_ == Poly(Rat(1))) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

} // namespace qm
