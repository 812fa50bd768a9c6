#pragma once

#include <gmpxx.h>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qm {

// Exact rational scalar. mpq_class keeps gcd(|num|,den)=1 and den>0 after
// canonicalize(); every constructor below leaves the value canonical.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    Rat r;
    if (slash == std::string::npos)
        r = Rat(s);
    else
        r = Rat(s.substr(0, slash)) / Rat(s.substr(slash + 1));
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline double rat_to_double(const Rat& r) { return r.get_d(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(Rat(1) / base);
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    acc.canonicalize();
    return acc;
}

// Fractional part mapped into [0,1); integer inputs map to 0.
inline Rat rat_frac(const Rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    Rat r = x - Rat(q);
    r.canonicalize();
    return r;
}

using Cplx = std::complex<double>;

} // namespace qm
