#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twocoh/errors.hpp"

namespace twocoh {

/// First witness of a violated group/crossed-module axiom: the axiom's name
/// and the element indices that break it.
struct AxiomViolation {
    std::string axiom;
    std::vector<long> witness;
};

/// A finite group given by its full multiplication table. Element 0 is always
/// the identity; elements are indices 0..order-1 and table[a][b] = a*b.
class FiniteGroup {
public:
    /// Checks all group axioms exhaustively; returns the first violation
    /// (identity first, then closure/shape, associativity, inverses).
    static std::optional<AxiomViolation> validate_table(
        const std::vector<std::vector<long>>& table);

    /// Throws Error if the table is not a group with identity 0.
    static FiniteGroup from_table(std::vector<std::vector<long>> table);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(long n);
    /// Dihedral group of order 2n (symmetries of the n-gon), n >= 1.
    static FiniteGroup dihedral(long n);
    /// Symmetric group on n letters, n >= 1, built by permutation closure.
    static FiniteGroup symmetric(long n);

    /// Closure of a set of permutations of {0..points-1} under composition.
    /// Composition convention throughout: (a*b) means "apply a first, then b".
    /// Breadth-first from the identity, so the identity gets index 0 and the
    /// enumeration is deterministic.
    static FiniteGroup from_permutations(const std::vector<std::vector<long>>& generators);

    long order() const { return static_cast<long>(table_.size()); }
    long mul(long a, long b) const { return table_[check(a)][check(b)]; }
    long inv(long a) const { return inverse_[check(a)]; }
    static constexpr long id = 0;

    const std::vector<std::vector<long>>& table() const { return table_; }

private:
    explicit FiniteGroup(std::vector<std::vector<long>> table);
    long check(long a) const {
        if (a < 0 || a >= order()) throw IndexError("group element index out of range");
        return a;
    }
    std::vector<std::vector<long>> table_;
    std::vector<long> inverse_;
};

/// A crossed module: finite groups G and H, a homomorphism i: G -> H, and a
/// right H-action on G by automorphisms, subject to the equivariance and
/// Peiffer conditions. Construction only checks shapes; validate() checks the
/// axioms exhaustively and reports a first witness per violated axiom.
class CrossedModule {
public:
    CrossedModule(FiniteGroup G, FiniteGroup H, std::vector<long> i_map,
                  std::vector<std::vector<long>> action);

    const FiniteGroup& G() const { return G_; }
    const FiniteGroup& H() const { return H_; }
    long i(long g) const { return i_[static_cast<std::size_t>(g)]; }
    /// The right action g^h.
    long act(long g, long h) const {
        return action_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
    }

    /// Every axiom with its status; empty list means the crossed module is
    /// valid. Checked axioms, in order: i_hom, action_identity,
    /// action_composition, action_automorphism, equivariance, peiffer.
    std::vector<AxiomViolation> validate() const;
    bool valid() const { return validate().empty(); }

private:
    FiniteGroup G_, H_;
    std::vector<long> i_;
    std::vector<std::vector<long>> action_;
};

/// An arrow (g, h) of the 2-group associated with a crossed module: the
/// semidirect product G x| H as a group under the vertical product, and a
/// groupoid over H under the horizontal product.
struct Arrow {
    long g = 0;
    long h = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Vertical (group) product (g1,h1) (g2,h2) = (g1^{h2} g2, h1 h2).
Arrow vmul(const CrossedModule& xm, const Arrow& a, const Arrow& b);
/// Inverse for the vertical product.
Arrow vinv(const CrossedModule& xm, const Arrow& a);
/// Vertical product of a whole list via the closed form
/// (g1^{h2...hq} g2^{h3...hq} ... g_{q-1}^{hq} gq, h1...hq); the empty
/// product is the unit (1,1). Must agree with a left fold of vmul.
Arrow multiprod(const CrossedModule& xm, const std::vector<Arrow>& rows);

inline long arrow_source(const Arrow& a) { return a.h; }
long arrow_target(const CrossedModule& xm, const Arrow& a);
/// Groupoid inversion iota(g,h) = (g^{-1}, h i(g)).
Arrow arrow_iota(const CrossedModule& xm, const Arrow& a);
inline Arrow arrow_unit(long h) { return Arrow{FiniteGroup::id, h}; }
/// Horizontal composition a . b for s(a) = t(b):
/// (g', h i(g)) (g, h) = (g g', h). Throws ComposabilityError otherwise.
Arrow hcomp(const CrossedModule& xm, const Arrow& a, const Arrow& b);

/// A point of the p-th nerve space of the 2-group in the coordinates
/// (g_1, ..., g_p; h): gs[j] is g_{j+1} and the level p is gs.size().
/// The corresponding chain of composable arrows is
///   arrow j = (g_{j+1}, h i(g_p ... g_{j+2})),   j = 0..p-1,
/// so the plain pair (g_p, h) sits in the last slot.
struct NervePoint {
    std::vector<long> gs;
    long h = 0;
    long level() const { return static_cast<long>(gs.size()); }
    friend bool operator==(const NervePoint&, const NervePoint&) = default;
};

/// Face k of a level-l point, 0 <= k <= l, landing at level l-1:
/// face 0 drops g_1, faces 0 < k < l merge (g_k, g_{k+1}) into g_{k+1} g_k
/// (the reversed order makes the faces match horizontal composition), and
/// face l drops g_l while pushing h to h i(g_l).
NervePoint face_p(const CrossedModule& xm, long k, const NervePoint& x);

/// Final target t_p(g_1,...,g_p;h) = h i(g_p ... g_1); the target of the
/// first arrow of the chain, and a group homomorphism on each nerve space.
long final_target(const CrossedModule& xm, const NervePoint& x);

/// The j-th arrow (0-based) of the composable chain encoded by x.
Arrow nerve_arrow(const CrossedModule& xm, const NervePoint& x, long j);

/// Rebuilds a nerve point from a composable chain (throws ComposabilityError
/// if sources and targets do not match up).
NervePoint nerve_from_arrows(const CrossedModule& xm, const std::vector<Arrow>& arrows);

/// Slotwise vertical product of two level-matched nerve points (the nerve
/// spaces are groups under the componentwise product of arrows).
NervePoint nerve_vmul(const CrossedModule& xm, const NervePoint& x, const NervePoint& y);

/// Plain group-tuple face maps for tuples (f_1,...,f_n):
/// face 0 drops f_1, faces 0 < k < n merge (f_k, f_{k+1}) into f_k f_{k+1}
/// (natural order), face n drops f_n.
std::vector<long> group_face(const FiniteGroup& g, long k, const std::vector<long>& tuple);

/// A point of the (p,q,r) grid domain: q nerve points at level p plus an
/// r-tuple of G-elements.
struct GridPoint {
    std::vector<NervePoint> rows;
    std::vector<long> fs;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Mixed-radix codec for the domain of the (p,q,r) cochain space, of size
/// |G|^{pq+r} |H|^q. Canonical digit order, least significant first:
/// row 1 as (g_11, ..., g_1p, h_1), then row 2, ..., then (f_1, ..., f_r).
class GridDomain {
public:
    GridDomain(const CrossedModule& xm, long p, long q, long r);

    long p() const { return p_; }
    long q() const { return q_; }
    long r() const { return r_; }
    std::size_t size() const { return size_; }

    std::size_t encode(const GridPoint& pt) const;
    GridPoint decode(std::size_t index) const;

private:
    const CrossedModule* xm_;
    long p_, q_, r_;
    std::size_t size_;
};

}  // namespace twocoh
