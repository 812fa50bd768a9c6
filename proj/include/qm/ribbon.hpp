#pragma once

#include "qm/dynamical.hpp"

#include <map>
#include <string>
#include <vector>

namespace qm {

// ---------------------------------------------------------------------------
// planar diagram engine
//
// A diagram is a stack of horizontal slices read bottom to top; each slice is
// a row of elementary pieces acting on consecutive strands.  Evaluation
// composes the slice operators; a closed diagram yields a scalar.
// ---------------------------------------------------------------------------

struct Coupon {
    FactorList dom, cod;
    Mat op;
};
using CouponLibrary = std::map<std::string, Coupon>;

enum class PieceKind {
    Id,        // id(m) / id*(m): identity strand
    Cup,       // cup(m): 1 -> V (x) V*
    CupStar,   // cup*(m): 1 -> V* (x) V, weight-corrected
    Cap,       // cap(m): V* (x) V -> 1
    CapStar,   // cap*(m): V (x) V* -> 1, weight-corrected
    CrossPos,  // X+: positive crossing, colors read off the incoming strands
    CrossNeg,  // X-: negative crossing
    TwistPos,  // tw+(m): full right-handed ribbon twist
    TwistNeg,  // tw-(m)
    CouponRef, // coupon(name)
};

struct Piece {
    PieceKind kind;
    long m = 0;
    bool dual = false;       // Id only
    std::string name;        // CouponRef only
};

struct RibbonDiagram {
    FactorList bottom;
    std::vector<std::vector<Piece>> slices;
};

// slice-by-slice composition; throws on interface mismatch
Mat evaluate_diagram(const RibbonDiagram& d, const CouponLibrary& lib = {});

// one line per slice, tokens id(m), id*(m), cup(m), cup*(m), cap(m), cap*(m),
// X+, X-, tw+(m), tw-(m), coupon(name), separated by whitespace
RibbonDiagram parse_diagram(const std::string& text, const FactorList& bottom = {});

// ---------------------------------------------------------------------------
// moduli-algebra standard form (one puncture)
//
// An element is supported on the fixed one-vertex graph with 2g loop edges;
// the data is the list of edge colors and a single invariant functional on
// space() = (x)_{i=g}^{1} V_{nu(i)}* (x) V_{mu(i)}* (x) V_{nu(i)} (x) V_{mu(i)}.
// ---------------------------------------------------------------------------

struct StandardFormElement {
    long genus = 1;
    std::vector<long> nu, mu; // handle i uses nu[i-1], mu[i-1]
    Mat phi;                  // 1 x dim invariant functional
    FactorList space() const;
};

// sums of standard-form elements represent general algebra elements
using StandardFormSum = std::vector<StandardFormElement>;

StandardFormElement unit_element(long genus);

// functionals spanning Hom(space, scalars) in the deterministic basis order
std::vector<Mat> invariant_functionals(const FactorList& fs);

// pairing scalar of two one-sided intertwiners V_l -> V_l (x) V^(*); the
// dual bases feeding the handle operators are normalized against it
RF intertwiner_pairing(const Mat& out_map, const Mat& in_map, long lambda, long m);

// the handle operator xi_{V_v, V_w}(lambda): V_l -> V_l (x) V_v* W_w* V_v V_w
Mat xi_operator(long v, long w, long lambda);

// H(f c_lambda) through the diagram route: composition of the handle
// operators xi_{nu,mu}(lambda) built from dual intertwiner bases
RF cartwheel_trace(const StandardFormElement& f, long lambda);
RF cartwheel_trace(const StandardFormSum& f, long lambda);

// the same quantity as a rational function of t = q^{2 lambda}, computed from
// the fusion matrix on the zero-weight line; (qdim)^{2g-1} H(f c_lambda)
// equals r_function at t = q^{2 lambda} for generic lambda
RF r_function(const StandardFormElement& f);
RF r_function(const StandardFormSum& f);

// the cutting functional H itself (the lambda = 0 case)
RF h_functional(const StandardFormElement& f);
RF h_functional(const StandardFormSum& f);

// non-commutative product, f below g; genus 1 only
StandardFormSum algebra_product(const StandardFormElement& f,
                                const StandardFormElement& g);
StandardFormSum algebra_product(const StandardFormSum& f, const StandardFormSum& g);

// coordinates of a sum in the invariant_functionals bases, keyed by (nu, mu);
// zero components are dropped, so equal elements give equal maps
std::map<std::pair<long, long>, std::vector<RF>>
canonical_coordinates(const StandardFormSum& f);

// genus-1 standard form of the central small-circle element around the
// puncture, colored by V_lambda; solved from the trace pairing
StandardFormSum c_element(long lambda);

} // namespace qm
