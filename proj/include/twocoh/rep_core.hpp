#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twocoh/exact_linalg.hpp"
#include "twocoh/group_core.hpp"
#include "twocoh/prng.hpp"

namespace twocoh {

/// A 2-term complex of vector spaces W -> V with structure map phi. Stored as
/// the matrix of phi, so dim V = phi.rows() and dim W = phi.cols().
struct TwoVectorSpace {
    Matrix phi;
    const Field& field() const { return phi.field(); }
    long dim_w() const { return static_cast<long>(phi.cols()); }
    long dim_v() const { return static_cast<long>(phi.rows()); }
};

/// An object of the general linear 2-group of phi: a pair of invertible maps
/// F on W, f on V with phi F = f phi.
struct GLPhiObject {
    Matrix F, f;
};

/// An arrow: A in Hom(V, W) such that I + A phi and I + phi A are invertible.
struct GLPhiArrow {
    Matrix A;
};

bool glphi_object_valid(const TwoVectorSpace& vs, const GLPhiObject& o);
bool glphi_arrow_valid(const TwoVectorSpace& vs, const GLPhiArrow& a);

/// Arrow group operation A1 (.) A2 = A1 + A2 + A1 phi A2 (identity: 0).
GLPhiArrow glphi_odot(const TwoVectorSpace& vs, const GLPhiArrow& a1, const GLPhiArrow& a2);
/// Inverse for the arrow group: -A (I + phi A)^{-1}.
GLPhiArrow glphi_dagger(const TwoVectorSpace& vs, const GLPhiArrow& a);
/// Structure map of the crossed module: A |-> (I + A phi, I + phi A).
GLPhiObject glphi_delta(const TwoVectorSpace& vs, const GLPhiArrow& a);
/// Right action A^{(F,f)} = F^{-1} A f.
GLPhiArrow glphi_act(const TwoVectorSpace& vs, const GLPhiArrow& a, const GLPhiObject& o);

/// A broken rule together with a coarse witness (sample number or element
/// indices, depending on the rule).
struct RepViolation {
    std::string rule;
    std::vector<long> witness;
};

/// Checks that the general linear 2-group of vs really is a crossed module
/// (equivariance of the structure map and the Peiffer identity). Exhaustive
/// over small prime fields, seeded sampling otherwise.
std::optional<RepViolation> validate_glphi_crossed_module(const TwoVectorSpace& vs,
                                                          SplitMix64& rng, int samples);

/// A 2-representation of the 2-group of a crossed module on W -> V, stored as
/// full matrix tables: rho00 on V and rho01 on W indexed by H, rho1: V -> W
/// indexed by G.
class TwoRepresentation {
public:
    TwoRepresentation(CrossedModule base, TwoVectorSpace vs, std::vector<Matrix> rho00,
                      std::vector<Matrix> rho01, std::vector<Matrix> rho1);

    const CrossedModule& base() const { return base_; }
    const TwoVectorSpace& vs() const { return vs_; }
    const Field& field() const { return vs_.field(); }
    long dim_v() const { return vs_.dim_v(); }
    long dim_w() const { return vs_.dim_w(); }

    const Matrix& rho00(long h) const { return rho00_[static_cast<std::size_t>(h)]; }
    const Matrix& rho01(long h) const { return rho01_[static_cast<std::size_t>(h)]; }
    const Matrix& rho1(long g) const { return rho1_[static_cast<std::size_t>(g)]; }
    /// rho00(h)^{-1}; equals rho00 at h^{-1} for a valid representation, which
    /// is how it is computed (no matrix inversion in the hot path).
    const Matrix& rho00_inv(long h) const { return rho00(base_.H().inv(h)); }
    const Matrix& rho01_inv(long h) const { return rho01(base_.H().inv(h)); }

    /// Exhaustively checks the defining equations; empty list means valid.
    /// Rules, in order: phi_intertwine, object_hom_v, object_hom_w,
    /// product_rule, structural_map_compat, action_compat, invertibility.
    std::vector<RepViolation> validate() const;
    bool valid() const { return validate().empty(); }

private:
    CrossedModule base_;
    TwoVectorSpace vs_;
    std::vector<Matrix> rho00_, rho01_, rho1_;
};

/// The ordinary representation of the arrow group on W (+) V induced by a
/// 2-representation:
///   (g, h) |-> [ rho01(h i(g))  rho01(h) rho1(g) ]
///              [ 0              rho00(h)         ]
Matrix honest_rep(const TwoRepresentation& rep, const Arrow& a);

/// Mixed-radix codec for F_p^dim, least significant coordinate first.
class VectorCodec {
public:
    VectorCodec(const Field& field, long dim);
    std::size_t size() const { return size_; }
    std::size_t encode(const Vec& v) const;
    Vec decode(std::size_t index) const;

private:
    Field field_;
    long dim_;
    std::size_t size_;
};

/// The semidirect product crossed module G x| W -> H x| V of a valid
/// 2-representation over a prime field:
///   (g0,w0)(g1,w1) = (g0 g1, w0 + rho01(i(g0)) w1),
///   (h0,v0)(h1,v1) = (h0 h1, v0 + rho00(h0) v1),
///   structure map (g,w) |-> (i(g), phi w),
///   action (g,w)^{(h,v)} = (g^h, rho01(h)^{-1}(w + rho1(g) v)).
/// Element indices: (g,w) |-> g + |G| * wcodec(w), likewise on the base.
CrossedModule semidirect_2group(const TwoRepresentation& rep);

/// The representation-up-to-homotopy data carried by the semidirect product:
/// the core-anchor varrho(h, w) = (h, rho00(h) phi w), the two quasi-actions,
/// and the curvature, which this construction computes from its defining
/// chain of horizontal composites and checks to be identically zero.
struct RuthData {
    std::vector<Matrix> varrho;                      // per h: W -> V
    std::vector<std::vector<long>> base_shift;       // [g][h] = h i(g)
    std::vector<std::vector<Matrix>> delta_w_fiber;  // [g][h] = rho01(i(g))^{-1}
    std::vector<Matrix> omega;                       // per (g1, g2, h): V -> W, all zero
    std::size_t omega_index(const CrossedModule& xm, long g1, long g2, long h) const;
};

RuthData ruth_data(const TwoRepresentation& rep);

}  // namespace twocoh
