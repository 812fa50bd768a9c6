#pragma once

#include "qm/ratfunc.hpp"

namespace qm {

// q-integer [n] = (q^n - q^{-n})/(q - q^{-1}) expanded as a Laurent
// polynomial in q (s-exponents divisible by 4); [-n] = -[n], [0] = 0
inline Poly q_integer(long n) {
    if (n == 0) return Poly();
    if (n < 0) return -q_integer(-n);
    Poly p;
    for (long j = 0; j < n; ++j) p += Poly::q_power(n - 1 - 2 * j);
    return p;
}

// q-dimension of the (m+1)-dimensional module: [m+1]
inline Poly q_dimension(long m) {
    if (m < 0) throw std::domain_error("q_dimension: negative weight");
    return q_integer(m + 1);
}

// (a;b)_n = prod_{k=0}^{n-1} (1 - a b^k)
inline RF q_pochhammer(const RF& a, const RF& b, long n) {
    if (n < 0) throw std::domain_error("q_pochhammer: negative length");
    RF prod(Rat(1));
    RF abk = a;
    for (long k = 0; k < n; ++k) {
        prod *= (RF(Rat(1)) - abk);
        abk *= b;
    }
    return prod;
}

// [n]! = [1][2]...[n]
inline Poly q_factorial(long n) {
    Poly p(Rat(1));
    for (long j = 1; j <= n; ++j) p *= q_integer(j);
    return p;
}

} // namespace qm
