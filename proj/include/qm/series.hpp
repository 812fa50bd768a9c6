#pragma once

#include "qm/rational.hpp"

#include <stdexcept>
#include <vector>

namespace qm {

// Truncated Laurent series in a formal variable u over a pluggable scalar
// field T (exact rationals, rational functions, or complex doubles).
// coeffs_[i] is the coefficient of u^{valuation_+i}; every exponent up to
// order_ inclusive is guaranteed correct, and nothing is stored beyond it.
template <class T>
class Series {
public:
    Series() : val_(0), order_(-1) {}
    Series(long valuation, std::vector<T> coeffs, long order)
        : val_(valuation), coeffs_(std::move(coeffs)), order_(order) {
        if ((long)coeffs_.size() != order_ - val_ + 1)
            throw std::invalid_argument("Series: coefficient window mismatch");
        normalize();
    }

    static Series constant(const T& c, long order) {
        if (order < 0) throw std::invalid_argument("Series::constant: order<0");
        std::vector<T> v((size_t)order + 1, T(0));
        v[0] = c;
        return Series(0, std::move(v), order);
    }
    static Series monomial(const T& c, long e, long order) {
        if (order < e) throw std::invalid_argument("Series::monomial: order<e");
        std::vector<T> v((size_t)(order - e) + 1, T(0));
        v[0] = c;
        return Series(e, std::move(v), order);
    }
    // exp(c*u) truncated
    static Series exp_linear(const T& c, long order) {
        std::vector<T> v((size_t)order + 1, T(0));
        T acc(1);
        v[0] = acc;
        for (long k = 1; k <= order; ++k) {
            acc = acc * c;
            acc = acc / T(k);
            v[(size_t)k] = acc;
        }
        return Series(0, std::move(v), order);
    }

    long valuation() const { return val_; }
    long order() const { return order_; }
    bool window_empty() const { return order_ < val_; }

    // coefficient of u^e; throws when e exceeds the guaranteed window
    T coeff(long e) const {
        if (e > order_ || window_empty())
            throw std::out_of_range("Series::coeff: beyond truncation order");
        if (e < val_) return T(0);
        return coeffs_[(size_t)(e - val_)];
    }

    // coefficient of u^{-1}
    T residue() const { return coeff(-1); }

    friend Series operator+(const Series& a, const Series& b) {
        long order = std::min(a.order_, b.order_);
        long val = std::min(a.val_, b.val_);
        if (order < val) return Series(val, {}, val - 1);
        std::vector<T> v((size_t)(order - val) + 1, T(0));
        for (long e = val; e <= order; ++e) v[(size_t)(e - val)] = a.coeff(e) + b.coeff(e);
        return Series(val, std::move(v), order);
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (T(-1) * b); }
    friend Series operator*(const T& c, const Series& a) {
        std::vector<T> v = a.coeffs_;
        for (auto& x : v) x = x * c;
        return Series(a.val_, std::move(v), a.order_);
    }
    friend Series operator*(const Series& a, const Series& b) {
        // product coefficients are fully determined up to
        // min(a.order+b.val, b.order+a.val)
        long val = a.val_ + b.val_;
        long order = std::min(a.order_ + b.val_, b.order_ + a.val_);
        if (a.window_empty() || b.window_empty() || order < val)
            return Series(val, {}, val - 1);
        std::vector<T> v((size_t)(order - val) + 1, T(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                long e = a.val_ + (long)i + b.val_ + (long)j;
                if (e > order) continue;
                v[(size_t)(e - val)] = v[(size_t)(e - val)] + a.coeffs_[i] * b.coeffs_[j];
            }
        return Series(val, std::move(v), order);
    }

    // multiplicative inverse; requires a nonzero leading coefficient
    Series invert() const {
        if (window_empty() || coeffs_.empty() || is_zero_scalar(coeffs_[0]))
            throw std::domain_error("Series::invert: zero leading coefficient");
        long n = order_ - val_; // number of correction terms available
        std::vector<T> v((size_t)n + 1, T(0));
        T lead_inv = T(1) / coeffs_[0];
        v[0] = lead_inv;
        for (long k = 1; k <= n; ++k) {
            T acc(0);
            for (long j = 1; j <= k; ++j) acc = acc + coeffs_[(size_t)j] * v[(size_t)(k - j)];
            v[(size_t)k] = T(0) - lead_inv * acc;
        }
        return Series(-val_, std::move(v), -val_ + n);
    }

    Series pow(long e) const {
        if (e < 0) return invert().pow(-e);
        // preserve the relative truncation window of *this
        long n = order_ - val_;
        Series acc = Series::constant(T(1), n);
        Series b = *this;
        while (e) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    // exp of a series with valuation >= 1
    Series exp() const {
        if (!window_empty() && val_ < 1)
            throw std::domain_error("Series::exp: needs positive valuation");
        long n = order_;
        Series acc = Series::constant(T(1), n);
        Series term = Series::constant(T(1), n);
        for (long k = 1; k <= n; ++k) {
            term = term * *this;
            term = (T(1) / T(k)) * term;
            acc = acc + term;
            if (term.window_empty()) break;
        }
        return acc;
    }

private:
    static bool is_zero_scalar(const T& x) { return x == T(0); }
    void normalize() {
        // raise the valuation past leading zeros (they are guaranteed zeros)
        size_t lead = 0;
        while (lead + 1 < coeffs_.size() && is_zero_scalar(coeffs_[lead])) ++lead;
        if (lead) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + (long)lead);
            val_ += (long)lead;
        }
    }
    long val_;
    std::vector<T> coeffs_;
    long order_;
};

} // namespace qm
