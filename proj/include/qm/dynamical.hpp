#pragma once

#include "qm/uqsl2.hpp"

namespace qm {

// The parameter lambda is carried through t = q^{2 lambda}; shifting
// lambda -> lambda - c is t -> t q^{-2c}, and the shifted reflection
// lambda -> -lambda - 2 is t -> q^{-4} t^{-1}.

// series coefficient q^n (1-q^{-2})^{2n} / (q^{-2}; q^{-2})_n shared by the
// braiding and fusion expansions
RF fusion_coeff(long n);

// J(lambda) on V_a (x) V_b: sum_n c_n f^n (x) e^n j_n(lambda) with
// j_n(lambda) = prod_{k<n} (1 - q^{2(lambda - h - k)})^{-1} read through the
// second factor's weight
Mat fusion_matrix(long a, long b);

// J with the two legs coproducted over fs[0..split) and fs[split..N)
Mat fusion_bipartite(const FactorList& fs, size_t split);

// the N-1 left-to-right factors J_{1,2..N}, J_{2,3..N}, ..., J_{N-1,N}
std::vector<Mat> fusion_blocks(const FactorList& fs);

// J_{1..N}(lambda) = product of the blocks
Mat fusion_matrix_multi(const FactorList& fs);

// Q(lambda) v_k = q^{-2(m-k+1)k} (t q^{2(k+1)}; q^{-2})_k /
//                 (t q^{2(2k-m)}; q^{-2})_k v_k
Mat q_operator(long m);
RF q_scalar(long m, long k);

// dual-aware diagonal action of the same universal element
Mat q_operator_on(const ModuleFactor& f);

// independent route Q = sum_i S(a_i) b_i over the fusion expansion
Mat q_operator_from_fusion(long m);

// A(lambda) v_k = (-1)^k q^{-k(m-k+1)} (same Pochhammer ratio) v_{m-k}
Mat dynamical_weyl(long m);
RF a_scalar(long m, long k);

// the composite v^{-1} K q^{-h^2/4} w Q(lambda)
Mat dynamical_weyl_composed(long m);

// Delta(A(lambda)) on V_a (x) V_b through the isotypic decomposition
Mat delta_dynamical_weyl(long a, long b);

Mat shift_lambda(const Mat& op, long c);   // t -> t q^{2c}
Mat weyl_flip_lambda(const Mat& op);       // t -> q^{-4} t^{-1}

// t -> q^{2n}; pole hits raise an error naming the entry (non-generic weight)
Mat specialize_lambda(const Mat& op, long n);

// terminating basic hypergeometric sums, used as oracles
RF phi21(const RF& a, const RF& b, const RF& c, const RF& p, const RF& z,
         long nmax);
RF phi32(const RF& a1, const RF& a2, const RF& a3, const RF& b1, const RF& b2,
         const RF& p, const RF& z, long nmax);

} // namespace qm
