#pragma once

#include "qm/qseries.hpp"
#include "qm/ribbon.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qm {

// ---------------------------------------------------------------------------
// q-trace series over dominant weights
//
// trace_q(f) = sum_lambda H(f c_lambda) chi_lambda(x) at numeric q = s^4.
// Generic lambda terms come from the rational function R_f evaluated at
// t = q^{2 lambda}; the finitely many lambda hitting a pole hyperplane fall
// back to the exact diagram route.  Summation order is ascending in lambda.
// ---------------------------------------------------------------------------

struct TraceSeriesConfig {
    Cplx q;                    // 0 < |q| < 1
    ConjugacyParameter x;      // one puncture: a single class parameter
    double tolerance = 1e-10;  // > 0
    long max_terms = 400;
};

struct TraceResult {
    Cplx value{0, 0};
    long terms = 0;            // number of lambda values summed
    bool special_x = false;    // warning only; the series itself is returned
    std::string route;         // "r_function" / "cartwheel" / "mixed"
    // multiplicative factor relating this series to the two-sided form
    std::string normalization;
};

TraceResult trace_q_series(const StandardFormSum& f, const TraceSeriesConfig& cfg);
TraceResult trace_q_series(const StandardFormElement& f, const TraceSeriesConfig& cfg);
Cplx trace_q(const StandardFormSum& f, const TraceSeriesConfig& cfg);
Cplx trace_q(const StandardFormElement& f, const TraceSeriesConfig& cfg);

// lambda values where the denominator of r vanishes at t = q^{2 lambda}
std::vector<long> r_pole_lambdas(const RF& r);

// two-sided series (-1)^{g-1} 2^g sum*_n e^{2 pi i n x} (q^n - q^{-n})^{1-2g}
// R_f(t = q^{2(n-1)}) at q = e^{i pi hbar}; equals T_g(x;q) for f = unit and
// relates to trace_q by (-1)^{g-1} 2^g delta(x) (q - q^{-1})^{1-2g} up to
// finitely many skipped-weight corrections
Cplx trace_series_twosided(const StandardFormSum& f, const Rat& x, Cplx hbar,
                           double tol);

// hbar-Laurent expansion of the two-sided series: exact (reusing the series
// module) when R_f is constant; otherwise only the pole set is reported and
// trace_asymptotic_eval provides numeric values
AsymptoticExpansion trace_asymptotic(const StandardFormSum& f, const Rat& x);

// numeric residue sum over the finite pole set (small-contour quadrature)
Cplx trace_asymptotic_eval(const StandardFormSum& f, const Rat& x, Cplx hbar);

// sum_lambda prod_p chi_lambda(x_p) / (qdim V_lambda)^{2g-2+|P|}
Cplx multi_puncture_trace_unit(const SurfaceSignature& sig,
                               const ConjugacyParameter& x, Cplx q, double tol);

// ---------------------------------------------------------------------------
// quantum torus U V = q V U, reference cyclic trace
// ---------------------------------------------------------------------------

struct QuantumTorusElement {
    std::map<std::pair<long, long>, RF> coeff; // (m, n) -> coefficient of U^m V^n
};

QuantumTorusElement torus_monomial(long m, long n);
QuantumTorusElement quantum_torus_product(const QuantumTorusElement& a,
                                          const QuantumTorusElement& b);
RF quantum_torus_trace(const QuantumTorusElement& a);

} // namespace qm
