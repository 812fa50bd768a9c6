#pragma once

#include "qm/ratfunc.hpp"

#include <vector>

namespace qm {

// One tensor factor: the (m+1)-dimensional irreducible, possibly dualized.
// Basis of V_m is v_0..v_m with weight(v_k) = m-2k; the dual basis vector
// xi^k carries weight -(m-2k).  Generators act on duals through the antipode
// transpose (left-dual convention).
struct ModuleFactor {
    long m = 0;
    bool dual = false;
    bool operator==(const ModuleFactor&) const = default;
};
using FactorList = std::vector<ModuleFactor>;

inline long factor_dim(const ModuleFactor& f) { return f.m + 1; }
long space_dim(const FactorList& fs);

// signed total weight of each product basis vector (first factor slowest)
std::vector<long> weight_table(const FactorList& fs);

// Dense matrix over the exact scalar field.
class Mat {
public:
    Mat() = default;
    Mat(long rows, long cols) : r_(rows), c_(cols), a_((size_t)(rows * cols)) {}
    static Mat identity(long n);

    long rows() const { return r_; }
    long cols() const { return c_; }
    RF& at(long i, long j) { return a_[(size_t)(i * c_ + j)]; }
    const RF& at(long i, long j) const { return a_[(size_t)(i * c_ + j)]; }

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const RF& c, const Mat& a);
    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    Mat transpose() const;
    Mat kron(const Mat& o) const; // this indexes the slower factor
    Mat inverse() const;          // Gaussian elimination; throws if singular
    Mat pow(long e) const;        // square matrices, e >= 0
    bool is_zero() const;
    // apply to a coordinate vector
    std::vector<RF> apply(const std::vector<RF>& v) const;
    // specialize the dynamical variable t -> s^k in every entry
    Mat subst_t_spow(long k) const;
    // substitute t -> r(s,t) in every entry
    Mat subst_t(const RF& r) const;
    Cplx eval(Cplx s, Cplx t = Cplx(1, 0), long i = 0, long j = 0) const;

private:
    long r_ = 0, c_ = 0;
    std::vector<RF> a_;
};

enum class Gen { E, F, K, Kinv };

// generator action on a single factor (antipode-transposed when dualized)
Mat factor_action(Gen g, const ModuleFactor& f);

// iterated-coproduct action on a whole factor list:
//   Delta(e) = e (x) 1 + K^{-1} (x) e,  Delta(f) = f (x) K + 1 (x) f,
//   Delta(K) = K (x) K, extended associatively
Mat coproduct_action(Gen g, const FactorList& fs);

// R = R0 q^{h (x) h / 2} with R0 = exp_{q^{-2}}(q e (x) f), a finite sum by
// nilpotency; acts on a (x) b
Mat r_matrix(const ModuleFactor& a, const ModuleFactor& b);

// braiding a (x) b -> b (x) a: flip composed with R (positive crossing) or
// the inverse of the opposite braiding (negative crossing)
Mat braiding(const ModuleFactor& a, const ModuleFactor& b, bool positive = true);

// ribbon element acts on V_m by q^{-m(m+2)/2}
RF ribbon_scalar(long m);

// w v_k = (-1)^k q^{-m^2/4 - k} v_{m-k}; conjugation by w realizes
// e -> -qf, f -> -q^{-1}e, K -> K^{-1}
Mat quantum_weyl(long m);

// quantum dimension [m+1] as a rational function
RF qdim_rf(long m);

// pivot element mu = K_{2rho} = K on V_m (diagonal)
Mat pivot(long m);

// duality structure maps (1 is the empty tensor product)
Mat coev(long m);   // 1 -> V (x) V*        v_i (x) xi^i summed
Mat ev(long m);     // V* (x) V -> 1        xi (x) v -> xi(v)
Mat evp(long m);    // V (x) V* -> 1        v (x) xi -> xi(mu v)
Mat coevp(long m);  // 1 -> V* (x) V        xi^i (x) mu^{-1} v_i summed

// basis of the space of module maps between two tensor products, found by
// weight filtering plus e/f-equivariance elimination; deterministic
// reduced-echelon normalization
std::vector<Mat> hom_basis(const FactorList& dom, const FactorList& cod);
std::vector<Mat> intertwiner_basis(const FactorList& dom, long target_m);

// certificate: exact commutation with all three generator actions
bool is_intertwiner(const Mat& op, const FactorList& dom, const FactorList& cod);

} // namespace qm
