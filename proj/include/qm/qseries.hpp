#pragma once

#include "qm/rational.hpp"
#include "qm/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qm {

struct SurfaceSignature {
    int genus = 1;
    int punctures = 1;
};

inline void check_signature(const SurfaceSignature& sig) {
    if (sig.genus < 1 || sig.punctures < 1 ||
        2 * sig.genus - 2 + sig.punctures < 1)
        throw std::domain_error("surface signature: convergence exponent must be positive");
}

// conjugacy parameters x_p, one per puncture, each in (0, 1/2)
using ConjugacyParameter = std::vector<Rat>;

struct LevelWeight {
    int level = 1;              // k >= 1
    std::vector<int> weights;   // even, 0 <= l <= 2k
};

void check_level_weight(const LevelWeight& lw);

// Finite Laurent expansion in hbar with exact rational coefficients plus
// validity metadata.
struct AsymptoticExpansion {
    std::map<long, Rat> terms; // hbar-exponent -> coefficient
    std::vector<long> pole_set;
    std::string decay_note;
    Cplx eval(Cplx hbar) const {
        Cplx acc(0, 0);
        for (auto& [e, c] : terms) acc += rat_to_double(c) * std::pow(hbar, (double)e);
        return acc;
    }
};

// res_{u=0} e^{{x}u} du / ((1-e^u) u^m); equals sum_{n != 0} e(nx)/(2 pi i n)^m
Rat bernoulli_series(long m, const Rat& x);

// W_g(x) = (-2)^{g-1} sum_eps sign(eps) B_{2g-2+|P|}(eps . x)
Rat witten_volume(const SurfaceSignature& sig, const ConjugacyParameter& x);

// truncated defining sum (numeric oracle); terms |n| <= nmax
Cplx witten_direct_truncated(const SurfaceSignature& sig, const ConjugacyParameter& x,
                             long nmax);
Cplx witten_direct_truncated_serial(const SurfaceSignature& sig,
                                    const ConjugacyParameter& x, long nmax);

// finite sum over regular (k+2)-torsion points, rounded through a 1e-6 gate
long long verlinde_sum_direct(const SurfaceSignature& sig, const LevelWeight& lw);

// exact residue route; must coincide with the direct sum
Rat verlinde_residue(const SurfaceSignature& sig, const LevelWeight& lw);

// P_m(x,k) = res_{u=0} e^{xu} du / ((1-e^u)(e^{u/2k}-e^{-u/2k})^m)
Rat p_residue(long m, const Rat& x, const Rat& k);

// T_g(x;q) partial sum with guaranteed absolute error < tol
Cplx t_series(const SurfaceSignature& sig, const ConjugacyParameter& x, Cplx q,
              double tol);
Cplx t_series_serial(const SurfaceSignature& sig, const ConjugacyParameter& x, Cplx q,
                     double tol);

// finite hbar-Laurent expansion of T_g(x; e^{pi i hbar}) near hbar -> i0+
AsymptoticExpansion t_asymptotic(const SurfaceSignature& sig, const ConjugacyParameter& x);

// true iff some sign vector has eps . x integral; returns the witness
std::optional<std::vector<int>> is_special(const ConjugacyParameter& x);

// sum_{lambda} prod_p chi_lambda(x_p) / (qdim V_lambda)^{2g-2+|P|} at numeric q
Cplx tilde_series(const SurfaceSignature& sig, const ConjugacyParameter& x, Cplx q,
                  double tol);

// SU(2) character of the weight-l module at the class with parameter x
inline Cplx chi_su2(long l, double x) {
    double s = std::sin(2 * M_PI * x);
    if (std::abs(s) < 1e-14) throw std::domain_error("chi_su2: singular class");
    return Cplx(std::sin(2 * M_PI * (double)(l + 1) * x) / s, 0);
}

} // namespace qm
