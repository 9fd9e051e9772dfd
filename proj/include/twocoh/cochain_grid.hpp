#pragma once

#include <cstddef>
#include <vector>

#include "twocoh/exact_linalg.hpp"
#include "twocoh/group_core.hpp"
#include "twocoh/rep_core.hpp"

namespace twocoh {

/// Position in the three-directional cochain grid of a 2-representation.
struct TriDegree {
    long p = 0, q = 0, r = 0;
    long total() const { return p + q + r; }
    friend bool operator==(const TriDegree&, const TriDegree&) = default;
};

/// A cochain at (p,q,r): a dense table of target vectors, one per canonical
/// domain index (the codec order of GridDomain). The target space is V when
/// r = 0 and W when r > 0.
class Cochain {
public:
    Cochain(const TwoRepresentation& rep, TriDegree deg);

    const TwoRepresentation& rep() const { return *rep_; }
    TriDegree degree() const { return deg_; }
    const GridDomain& domain() const { return dom_; }
    long target_dim() const { return td_; }
    std::size_t points() const { return dom_.size(); }

    Vec get(std::size_t index) const;
    void set(std::size_t index, const Vec& v);
    void add(std::size_t index, const Vec& v);

    /// Flat storage: value at domain index i occupies entries
    /// [i*target_dim, (i+1)*target_dim).
    const Vec& data() const { return data_; }
    Vec& data() { return data_; }

    bool is_zero() const { return vec_is_zero(data_); }

private:
    const TwoRepresentation* rep_;
    TriDegree deg_;
    GridDomain dom_;
    long td_;
    Vec data_;
};

/// |G|^{pq+r} |H|^q, the number of domain points of the (p,q,r) cochain space.
std::size_t domain_size(const CrossedModule& xm, long p, long q, long r);

/// One summand of a differential evaluated at a fixed output point: the
/// contribution coeff * c(index), with any sign folded into coeff.
struct CochainTerm {
    std::size_t index;
    Matrix coeff;
};

/// The k-th simplicial face applied to every row of a grid point (the f-part
/// is untouched). Rows of level 0 have no faces; with no rows at all the
/// point is its own face for every k.
GridPoint grid_face_p(const CrossedModule& xm, long k, const GridPoint& x);

/// The j-th row face: j = 0 drops the first row, 0 < j < #rows multiplies
/// rows j and j+1 (1-based) with the componentwise vertical product, and
/// j = #rows drops the last row. The f-part is untouched.
GridPoint grid_face_q(const CrossedModule& xm, long j, const GridPoint& x);

/// The product t_p(row_1) ... t_p(row_k) of the final targets of the rows.
long targets_product(const CrossedModule& xm, const std::vector<NervePoint>& rows);

/// Componentwise right action of h on a G-tuple.
std::vector<long> acted_tuple(const CrossedModule& xm, const std::vector<long>& fs, long h);

// The three grid differentials. Each has four entry points sharing one term
// generator: *_terms lists the contributions of the differential at a single
// output point (the evaluation-callback contract used for sampled checks at
// large degree), *_at evaluates there, the Cochain overload materializes a
// dense table, and *_matrix assembles the full linear map in codec order
// (row/column blocks of size target_dim per domain point).

/// p-direction differential at (p,q,r) -> (p+1,q,r). For q = 0 it is the
/// zero map out of even p and the identity out of odd p; for q > 0 it is the
/// alternating sum over row-wise faces, with coefficient
/// rho01(i(pr_G(first arrows of the rows, multiplied vertically)))^{-1} on
/// face 0 when r > 0 and trivial coefficients when r = 0.
std::vector<CochainTerm> diff_p_terms(const TwoRepresentation& rep, TriDegree in_deg,
                                      const GridPoint& out);
Vec diff_p_at(const Cochain& c, std::size_t out_index);
Cochain diff_p(const Cochain& c);
Matrix diff_p_matrix(const TwoRepresentation& rep, TriDegree in_deg);

/// q-direction differential at (p,q,r) -> (p,q+1,r). Face 0 drops the first
/// row; for r = 0 its coefficient is rho00(t_p(row_1)), for r > 0 it instead
/// acts on the f-part by t_p(row_1). Interior faces merge adjacent rows with
/// the componentwise vertical product; the last face drops the last row, with
/// extra coefficient rho01(t_p(last row))^{-1} when r > 0.
std::vector<CochainTerm> diff_q_terms(const TwoRepresentation& rep, TriDegree in_deg,
                                      const GridPoint& out);
Vec diff_q_at(const Cochain& c, std::size_t out_index);
Cochain diff_q(const Cochain& c);
Matrix diff_q_matrix(const TwoRepresentation& rep, TriDegree in_deg);

/// r-direction differential at (p,q,r) -> (p,q,r+1). The first step (r = 0)
/// sends v to rho01(t_p(row_1)...t_p(row_q))^{-1} rho1(f) v; for r > 0 it is
/// the alternating sum over faces of the f-tuple with coefficient
/// rho01(i(f_0^{t_p(row_1)...t_p(row_q)})) on face 0.
std::vector<CochainTerm> diff_r_terms(const TwoRepresentation& rep, TriDegree in_deg,
                                      const GridPoint& out);
Vec diff_r_at(const Cochain& c, std::size_t out_index);
Cochain diff_r(const Cochain& c);
Matrix diff_r_matrix(const TwoRepresentation& rep, TriDegree in_deg);

/// A scalar-valued total cochain of the bisimplicial nerve: component p
/// (0 <= p <= k) is a scalar table on the q-fold power of the level-p nerve
/// space with q = k - p, in codec order.
struct BisimplicialCochain {
    long k = 0;
    std::vector<Vec> comp;
};

BisimplicialCochain omega_tot_zero(const CrossedModule& xm, const Field& f, long k);

/// Total differential d = (-1)^p (del + delta) with trivial coefficients:
/// component (p,q) contributes (-1)^p times its alternating row-wise face sum
/// to (p+1,q) and (-1)^p times its alternating row-merge face sum to (p,q+1).
BisimplicialCochain omega_tot_diff(const CrossedModule& xm, const BisimplicialCochain& c);

/// Matrix of omega_tot_diff on degree k, components concatenated p = 0..k.
Matrix omega_tot_matrix(const CrossedModule& xm, const Field& f, long k);

}  // namespace twocoh
