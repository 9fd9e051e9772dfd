#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "twocoh/cochain_grid.hpp"
#include "twocoh/exact_linalg.hpp"
#include "twocoh/group_core.hpp"
#include "twocoh/rep_core.hpp"

namespace twocoh {

/// One signed G-tuple of a formal tuple polynomial.
struct TupleTerm {
    int sign = 1;  // +1 or -1
    std::vector<long> tuple;
};

/// A formal signed sum of equal-length G-tuples. The higher difference maps
/// evaluate a cochain on every tuple and add the results with the signs.
/// Keeping these sums first-class keeps the recursive constructions literal
/// (prepend / append / act / negate mirror the construction steps) and makes
/// term counts directly checkable.
class FormalTuplePolynomial {
public:
    FormalTuplePolynomial() = default;

    static FormalTuplePolynomial single(std::vector<long> tuple, int sign = 1);

    /// Common tuple length; -1 while the polynomial has no terms.
    long arity() const { return arity_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const std::vector<TupleTerm>& terms() const { return terms_; }

    /// Appends one term; ShapeError if the length disagrees with the others.
    void add_term(int sign, std::vector<long> tuple);
    FormalTuplePolynomial& operator+=(const FormalTuplePolynomial& o);
    FormalTuplePolynomial operator-() const;

    /// Tuple-wise (prefix, tuple) concatenation, keeping signs.
    FormalTuplePolynomial prepended(const std::vector<long>& prefix) const;
    FormalTuplePolynomial prepended(long g) const;
    FormalTuplePolynomial appended(long g) const;
    /// Entry-wise right action by h, keeping signs.
    FormalTuplePolynomial acted(const CrossedModule& xm, long h) const;
    /// Merges the first two entries of every tuple into their product
    /// (natural order), keeping signs; ShapeError if arity < 2.
    FormalTuplePolynomial merged_first_pair(const FiniteGroup& G) const;
    /// Drops the first entry of every tuple, keeping signs.
    FormalTuplePolynomial dropped_first(const FiniteGroup& G) const;

    /// Cancels matching +tuple/-tuple pairs; repeated same-sign tuples stay
    /// as separate terms, so every sign remains +1 or -1. Term order is the
    /// surviving construction order.
    FormalTuplePolynomial normalized() const;

    /// Copy with the k-th term (construction order) removed; IndexError when
    /// out of range. Only the deliberate-corruption hooks use this.
    FormalTuplePolynomial without_term(std::size_t k) const;

private:
    long arity_ = -1;
    std::vector<TupleTerm> terms_;
};

/// A rectangular block of arrows: `height` rows, each a horizontally
/// composable chain of `width` arrows. The higher difference maps are
/// defined through the top-left blocks of their output points, the rows
/// below them, and the folds (horizontal composition along each row followed
/// by the vertical product down the rows) of those blocks. Entry accessors
/// are 1-based (row, column), matching how the chains are written out in the
/// construction comments.
class GammaBlock {
public:
    GammaBlock(const CrossedModule& xm, std::vector<NervePoint> rows);

    long height() const { return static_cast<long>(rows_.size()); }
    long width() const;
    const std::vector<NervePoint>& rows() const { return rows_; }
    const CrossedModule& xm() const { return *xm_; }

    /// The (i, j) arrow, its G-part and its source, 1-based.
    Arrow arrow(long i, long j) const;
    long g(long i, long j) const { return arrow(i, j).g; }
    long h(long i, long j) const { return arrow(i, j).h; }

    /// First `rows` rows, each truncated to its first `cols` arrows.
    GammaBlock prefix(long cols, long rows) const;
    /// Rows after the first `rows`, each truncated to its first `cols` arrows.
    GammaBlock complement(long cols, long rows) const;
    /// Rows after the first `rows`, each with its first `cols` arrows
    /// dropped: the evaluation point of the input cochain.
    std::vector<NervePoint> inner_rows(long cols, long rows) const;

    /// Every row loses its first k arrows (row count unchanged).
    GammaBlock drop_cols(long k) const;
    /// The first k rows are removed.
    GammaBlock drop_rows(long k) const;

    /// Horizontal fold of each row, then the vertical product down the rows;
    /// the empty block folds to the unit arrow (1, 1).
    Arrow fold() const;
    long fold_g() const { return fold().g; }
    /// Source of the fold: the product of the rows' last-arrow sources.
    long source() const { return arrow_source(fold()); }

    /// (g_{1w}, ..., g_{11}) for a single-row block (ShapeError otherwise):
    /// the reversed order matches horizontal composition.
    std::vector<long> reversed_row_tuple() const;
    /// (g_{11}^{h_{21}...h_{k1}}, g_{21}^{h_{31}...h_{k1}}, ..., g_{k1}) for
    /// a single-column block (ShapeError otherwise): each entry is pushed
    /// down by the sources of the arrows below it.
    std::vector<long> staircase_column_tuple() const;

private:
    const CrossedModule* xm_;
    std::vector<NervePoint> rows_;
};

/// Families of constructed tuple polynomials, addressable by the corruption
/// hooks and named in reports. page_* families feed the maps that land at
/// fibre degree zero; fibre_* families feed the maps that keep a positive
/// fibre degree. Indices name the (column, row) shift of the map they serve.
enum class PolyFamily {
    none,
    page_22,
    page_32,
    page_23,
    fibre_11,
    fibre_21,
    fibre_12,
    fibre_31,
    fibre_13,
    fibre_22,
};

/// Readings and corruption hooks for the higher difference maps.
///
/// The recursive and explicit constructions leave three spots genuinely
/// underdetermined (a nested polynomial is handed a whole block where a
/// single arrow or a row pair is needed, or an f-argument is omitted); each
/// candidate reading is implemented behind a selector, and the commutation
/// identities act as arbiter. The defaults are the readings under which
/// every identity holds exactly on the test corpus.
struct DeltaOptions {
    /// Single-arrow argument of the nested (1,1) fibre polynomial inside the
    /// recursive (2,1) construction: the arrow left after peeling the first
    /// one off the row (default), the peeled first arrow, or the whole row
    /// folded into one arrow.
    enum class Rec21Inner { second_arrow, first_arrow, folded_row };
    /// Same spot inside the recursive (1,2) construction: the row left after
    /// peeling the last one off the column (default), the peeled last row,
    /// or the whole column folded into one arrow.
    enum class Rec12Inner { first_row, second_row, folded_column };
    /// Which two rows of the column feed the nested (1,2) polynomial inside
    /// the explicit (1,3) fibre construction.
    enum class Peel13Inner { leading_rows, trailing_rows };
    /// The f-argument of the nested (2,1) polynomial inside the explicit
    /// (2,2) fibre construction (the construction text omits it): f as is,
    /// or pushed by h_{11}, h_{21}, h_{11}h_{21}, or the target h_{11}i(g_{11}).
    enum class Fibre22FArg { plain, acted_h11, acted_h21, acted_h11_h21, acted_target11 };

    Rec21Inner rec21_inner = Rec21Inner::second_arrow;
    Rec12Inner rec12_inner = Rec12Inner::first_row;
    Peel13Inner peel13_inner = Peel13Inner::leading_rows;
    Fibre22FArg fibre22_f_arg = Fibre22FArg::plain;

    /// Deliberate corruptions for the sensitivity suite; production use
    /// keeps them off, and the squared-differential checks must flag each
    /// one with a nonzero witness.
    bool corrupt_swap_21 = false;  ///< keep (g_{11}, g_{12}) order in the (2,1) page tuple
    PolyFamily corrupt_family = PolyFamily::none;
    long corrupt_drop = -1;  ///< 0-based construction-order term index to remove
};

/// Human-readable (key, value) pairs describing the active readings and any
/// corruption; verification reports record these.
std::vector<std::pair<std::string, std::string>> delta_active_readings(const DeltaOptions& opt);

/// The two aligned G^r tuples through which the fibre-degree-lowering maps
/// trade the fibre tuple against one arrow (g, h): the arrow's inverse is
/// inserted n slots before the end, everything before it is pushed by
/// h i(g), everything after by h, and the pair differs only in the final
/// entry — f_{r-1}^h g for the first member, g for the second. Requires
/// fvec of length r-1 >= 1 and 0 < n < r; RangeError otherwise.
std::pair<std::vector<long>, std::vector<long>> c_pair(const CrossedModule& xm, long n,
                                                       const std::vector<long>& fvec,
                                                       const Arrow& gamma);

/// The signed tuples fed to the input cochain by the (cols, rows) map that
/// lands at fibre degree zero, built on the output point's top-left block
/// (tuple length = cols + rows - 1). Implemented shapes: single-row
/// (cols, 1), single-column (1, rows), and (2,2), (3,2), (2,3).
FormalTuplePolynomial page_tuple_poly(long cols, long rows, const GammaBlock& corner,
                                      const DeltaOptions& opt = {});

/// Independent reassembly of the (2,2) page polynomial out of the smaller
/// families; the tests check it agrees with page_tuple_poly(2, 2, ...)
/// termwise after cancellation.
FormalTuplePolynomial page_tuple_poly_22_recast(const GammaBlock& corner);

/// The signed tuples for the maps that keep a positive fibre degree: the
/// output point's fibre tuple fvec is woven together with the top-left
/// block's arrows into input tuples of length |fvec| + cols + rows - 1.
/// Implemented shapes: (1,1) for any |fvec| >= 1, (2,1) and (1,2) for any
/// |fvec| >= 1 (recursively above length 1), and (3,1), (1,3), (2,2) for
/// |fvec| = 1.
FormalTuplePolynomial fibre_tuple_poly(long cols, long rows, const std::vector<long>& fvec,
                                       const GammaBlock& corner, const DeltaOptions& opt = {});

/// Signed sum of evaluations of c at (rows; fibre_prefix ++ tuple) over the
/// polynomial's terms. Empty polynomial: the zero vector. ShapeError when
/// the rows or the assembled fibre tuple do not fit c's domain.
Vec poly_eval(const FormalTuplePolynomial& poly, const Cochain& c,
              const std::vector<NervePoint>& rows, const std::vector<long>& fibre_prefix = {});

/// Output position of the (a, b) difference map out of in_deg: the map
/// shifts a column levels, b row levels, and lowers the fibre degree by
/// a + b - 1. RangeError when that map is not defined at in_deg.
TriDegree delta_out_degree(TriDegree in_deg, long a, long b);
/// True when delta_out_degree would succeed.
bool delta_supported(TriDegree in_deg, long a, long b);

// The (a, b) difference maps share the four entry points of the grid
// differentials: *_terms lists the contributions at one output point (the
// callback contract for sampled checks), *_at evaluates there, delta_map
// materializes a dense table, and delta_matrix assembles the linear map in
// codec order. Maps landing at fibre degree zero twist by rho00 of the
// product of the top-left block's column-a sources and land in V through
// phi; the others twist by rho01-inverses of structure images of the folds
// and stay in W.
std::vector<CochainTerm> delta_terms(const TwoRepresentation& rep, TriDegree in_deg, long a,
                                     long b, const GridPoint& out, const DeltaOptions& opt = {});
Vec delta_at(const Cochain& c, long a, long b, std::size_t out_index,
             const DeltaOptions& opt = {});
Cochain delta_map(const Cochain& c, long a, long b, const DeltaOptions& opt = {});
Matrix delta_matrix(const TwoRepresentation& rep, TriDegree in_deg, long a, long b,
                    const DeltaOptions& opt = {});

// Named wrappers with their degree preconditions (RangeError when violated).

/// (1,1): defined for fibre degree >= 1.
Cochain delta_11(const Cochain& c, const DeltaOptions& opt = {});
/// (2,1) and (1,2): defined for fibre degree >= 2.
Cochain delta_21(const Cochain& c, const DeltaOptions& opt = {});
Cochain delta_12(const Cochain& c, const DeltaOptions& opt = {});
/// (rr,1) / (1,rr) landing at fibre degree zero; rr must equal c's fibre
/// degree.
Cochain delta_r1_front(const Cochain& c, long rr, const DeltaOptions& opt = {});
Cochain delta_1r_front(const Cochain& c, long rr, const DeltaOptions& opt = {});
/// (2,2) landing at fibre degree zero; requires fibre degree 3.
Cochain delta_22(const Cochain& c, const DeltaOptions& opt = {});
/// (3,2) / (2,3) landing at fibre degree zero; require fibre degree 4.
Cochain delta_32(const Cochain& c, const DeltaOptions& opt = {});
Cochain delta_23(const Cochain& c, const DeltaOptions& opt = {});
/// (3,1) / (1,3) / (2,2) keeping fibre degree 1; require fibre degree 4.
Cochain delta_31_off(const Cochain& c, const DeltaOptions& opt = {});
Cochain delta_13_off(const Cochain& c, const DeltaOptions& opt = {});
Cochain delta_22_off(const Cochain& c, const DeltaOptions& opt = {});

}  // namespace twocoh
