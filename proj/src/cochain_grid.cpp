#include "twocoh/cochain_grid.hpp"

#include <cassert>

#include "twocoh/errors.hpp"

namespace twocoh {

namespace {

long target_dim_of(const TwoRepresentation& rep, const TriDegree& d) {
    return d.r == 0 ? rep.dim_v() : rep.dim_w();
}

}  // namespace

Cochain::Cochain(const TwoRepresentation& rep, TriDegree deg)
    : rep_(&rep),
      deg_(deg),
      dom_(rep.base(), deg.p, deg.q, deg.r),
      td_(target_dim_of(rep, deg)),
      data_(vec_zero(rep.field(), dom_.size() * static_cast<std::size_t>(td_))) {}

Vec Cochain::get(std::size_t index) const {
    if (index >= dom_.size()) throw IndexError("cochain point index out of range");
    const auto td = static_cast<std::size_t>(td_);
    return Vec(data_.begin() + static_cast<long>(index * td),
               data_.begin() + static_cast<long>((index + 1) * td));
}

void Cochain::set(std::size_t index, const Vec& v) {
    if (index >= dom_.size()) throw IndexError("cochain point index out of range");
    const auto td = static_cast<std::size_t>(td_);
    if (v.size() != td) throw ShapeError("cochain value has wrong dimension");
    for (std::size_t j = 0; j < td; ++j) data_[index * td + j] = v[j];
}

void Cochain::add(std::size_t index, const Vec& v) {
    if (index >= dom_.size()) throw IndexError("cochain point index out of range");
    const auto td = static_cast<std::size_t>(td_);
    if (v.size() != td) throw ShapeError("cochain value has wrong dimension");
    for (std::size_t j = 0; j < td; ++j) data_[index * td + j] += v[j];
}

std::size_t domain_size(const CrossedModule& xm, long p, long q, long r) {
    return GridDomain(xm, p, q, r).size();
}

GridPoint grid_face_p(const CrossedModule& xm, long k, const GridPoint& x) {
    GridPoint out;
    out.fs = x.fs;
    out.rows.reserve(x.rows.size());
    for (const NervePoint& row : x.rows) out.rows.push_back(face_p(xm, k, row));
    return out;
}

GridPoint grid_face_q(const CrossedModule& xm, long j, const GridPoint& x) {
    const long m = static_cast<long>(x.rows.size());
    if (j < 0 || j > m) throw IndexError("row face index out of range");
    if (m == 0) throw IndexError("point with no rows has no row faces");
    GridPoint out;
    out.fs = x.fs;
    if (j == 0) {
        out.rows.assign(x.rows.begin() + 1, x.rows.end());
    } else if (j == m) {
        out.rows.assign(x.rows.begin(), x.rows.end() - 1);
    } else {
        for (long t = 0; t < m; ++t) {
            if (t == j) continue;
            if (t == j - 1)
                out.rows.push_back(nerve_vmul(xm, x.rows[static_cast<std::size_t>(t)],
                                              x.rows[static_cast<std::size_t>(t + 1)]));
            else
                out.rows.push_back(x.rows[static_cast<std::size_t>(t)]);
        }
    }
    return out;
}

long targets_product(const CrossedModule& xm, const std::vector<NervePoint>& rows) {
    long acc = FiniteGroup::id;
    for (const NervePoint& row : rows) acc = xm.H().mul(acc, final_target(xm, row));
    return acc;
}

std::vector<long> acted_tuple(const CrossedModule& xm, const std::vector<long>& fs, long h) {
    std::vector<long> out;
    out.reserve(fs.size());
    for (long f : fs) out.push_back(xm.act(f, h));
    return out;
}

namespace {

Matrix scaled_identity(const Field& f, long n, int sign) {
    Matrix m = Matrix::identity(f, static_cast<std::size_t>(n));
    return sign >= 0 ? m : -m;
}

int alt(long k) { return k % 2 == 0 ? 1 : -1; }

using TermsFn = std::vector<CochainTerm> (*)(const TwoRepresentation&, TriDegree,
                                             const GridPoint&);

Vec eval_terms(const std::vector<CochainTerm>& terms, const Cochain& c, const Field& f,
               long out_td) {
    Vec acc = vec_zero(f, static_cast<std::size_t>(out_td));
    for (const CochainTerm& t : terms) acc = vec_add(acc, t.coeff.apply(c.get(t.index)));
    return acc;
}

Cochain apply_terms(TermsFn gen, const Cochain& c, TriDegree out_deg) {
    Cochain out(c.rep(), out_deg);
    const GridDomain& dom = out.domain();
    for (std::size_t i = 0; i < dom.size(); ++i)
        out.set(i, eval_terms(gen(c.rep(), c.degree(), dom.decode(i)), c, c.rep().field(),
                              out.target_dim()));
    return out;
}

Vec eval_one(TermsFn gen, const Cochain& c, TriDegree out_deg, std::size_t out_index) {
    const GridDomain dom(c.rep().base(), out_deg.p, out_deg.q, out_deg.r);
    const long td = out_deg.r == 0 ? c.rep().dim_v() : c.rep().dim_w();
    return eval_terms(gen(c.rep(), c.degree(), dom.decode(out_index)), c, c.rep().field(), td);
}

Matrix assemble_matrix(TermsFn gen, const TwoRepresentation& rep, TriDegree in_deg,
                       TriDegree out_deg) {
    const GridDomain in_dom(rep.base(), in_deg.p, in_deg.q, in_deg.r);
    const GridDomain out_dom(rep.base(), out_deg.p, out_deg.q, out_deg.r);
    const auto in_td = static_cast<std::size_t>(target_dim_of(rep, in_deg));
    const auto out_td = static_cast<std::size_t>(target_dim_of(rep, out_deg));
    Matrix m(rep.field(), out_dom.size() * out_td, in_dom.size() * in_td);
    for (std::size_t i = 0; i < out_dom.size(); ++i)
        for (const CochainTerm& t : gen(rep, in_deg, out_dom.decode(i)))
            m.add_block(i * out_td, t.index * in_td, t.coeff);
    return m;
}

}  // namespace

std::vector<CochainTerm> diff_p_terms(const TwoRepresentation& rep, TriDegree in_deg,
                                      const GridPoint& out) {
    const CrossedModule& xm = rep.base();
    const Field& fld = rep.field();
    const long td = target_dim_of(rep, in_deg);
    const GridDomain in_dom(xm, in_deg.p, in_deg.q, in_deg.r);
    std::vector<CochainTerm> terms;
    if (in_deg.q == 0) {
        // No rows to differentiate along: the alternating sum of p+2 copies of
        // the same point, which cancels for even p and leaves one copy for odd.
        if (in_deg.p % 2 != 0)
            terms.push_back({in_dom.encode(out), scaled_identity(fld, td, +1)});
        return terms;
    }
    for (long k = 0; k <= in_deg.p + 1; ++k) {
        const std::size_t idx = in_dom.encode(grid_face_p(xm, k, out));
        if (k == 0 && in_deg.r > 0) {
            // Left twist by the structure image of the vertical product of the
            // first arrows of the rows.
            std::vector<Arrow> firsts;
            firsts.reserve(out.rows.size());
            for (const NervePoint& row : out.rows) firsts.push_back(nerve_arrow(xm, row, 0));
            const Arrow m = multiprod(xm, firsts);
            terms.push_back({idx, rep.rho01_inv(xm.i(m.g))});
        } else {
            terms.push_back({idx, scaled_identity(fld, td, alt(k))});
        }
    }
    return terms;
}

std::vector<CochainTerm> diff_q_terms(const TwoRepresentation& rep, TriDegree in_deg,
                                      const GridPoint& out) {
    const CrossedModule& xm = rep.base();
    const Field& fld = rep.field();
    const long td = target_dim_of(rep, in_deg);
    const GridDomain in_dom(xm, in_deg.p, in_deg.q, in_deg.r);
    const long m = in_deg.q + 1;  // rows of the output point
    std::vector<CochainTerm> terms;
    for (long j = 0; j <= m; ++j) {
        if (j == 0) {
            const long t1 = final_target(xm, out.rows.front());
            GridPoint face = grid_face_q(xm, 0, out);
            if (in_deg.r == 0) {
                terms.push_back({in_dom.encode(face), rep.rho00(t1)});
            } else {
                // The dropped first row acts on the fibre coordinates instead
                // of contributing a matrix coefficient.
                face.fs = acted_tuple(xm, face.fs, t1);
                terms.push_back({in_dom.encode(face), scaled_identity(fld, td, +1)});
            }
        } else if (j == m && in_deg.r > 0) {
            const long tl = final_target(xm, out.rows.back());
            terms.push_back({in_dom.encode(grid_face_q(xm, j, out)),
                             alt(j) == 1 ? rep.rho01_inv(tl) : -rep.rho01_inv(tl)});
        } else {
            terms.push_back(
                {in_dom.encode(grid_face_q(xm, j, out)), scaled_identity(fld, td, alt(j))});
        }
    }
    return terms;
}

std::vector<CochainTerm> diff_r_terms(const TwoRepresentation& rep, TriDegree in_deg,
                                      const GridPoint& out) {
    const CrossedModule& xm = rep.base();
    const Field& fld = rep.field();
    const GridDomain in_dom(xm, in_deg.p, in_deg.q, in_deg.r);
    const long tw = targets_product(xm, out.rows);
    std::vector<CochainTerm> terms;
    if (in_deg.r == 0) {
        // First step: v |-> rho01(t-product)^{-1} rho1(f) v.
        GridPoint base = out;
        const long f0 = base.fs.front();
        base.fs.clear();
        terms.push_back({in_dom.encode(base), rep.rho01_inv(tw) * rep.rho1(f0)});
        return terms;
    }
    const long td = rep.dim_w();
    for (long k = 0; k <= in_deg.r + 1; ++k) {
        GridPoint face = out;
        if (k == 0) {
            face.fs.assign(out.fs.begin() + 1, out.fs.end());
            terms.push_back({in_dom.encode(face), rep.rho01(xm.i(xm.act(out.fs.front(), tw)))});
        } else {
            face.fs = group_face(xm.G(), k, out.fs);
            terms.push_back({in_dom.encode(face), scaled_identity(fld, td, alt(k))});
        }
    }
    return terms;
}

Vec diff_p_at(const Cochain& c, std::size_t out_index) {
    TriDegree d = c.degree();
    return eval_one(&diff_p_terms, c, {d.p + 1, d.q, d.r}, out_index);
}
Cochain diff_p(const Cochain& c) {
    TriDegree d = c.degree();
    return apply_terms(&diff_p_terms, c, {d.p + 1, d.q, d.r});
}
Matrix diff_p_matrix(const TwoRepresentation& rep, TriDegree in_deg) {
    return assemble_matrix(&diff_p_terms, rep, in_deg, {in_deg.p + 1, in_deg.q, in_deg.r});
}

Vec diff_q_at(const Cochain& c, std::size_t out_index) {
    TriDegree d = c.degree();
    return eval_one(&diff_q_terms, c, {d.p, d.q + 1, d.r}, out_index);
}
Cochain diff_q(const Cochain& c) {
    TriDegree d = c.degree();
    return apply_terms(&diff_q_terms, c, {d.p, d.q + 1, d.r});
}
Matrix diff_q_matrix(const TwoRepresentation& rep, TriDegree in_deg) {
    return assemble_matrix(&diff_q_terms, rep, in_deg, {in_deg.p, in_deg.q + 1, in_deg.r});
}

Vec diff_r_at(const Cochain& c, std::size_t out_index) {
    TriDegree d = c.degree();
    return eval_one(&diff_r_terms, c, {d.p, d.q, d.r + 1}, out_index);
}
Cochain diff_r(const Cochain& c) {
    TriDegree d = c.degree();
    return apply_terms(&diff_r_terms, c, {d.p, d.q, d.r + 1});
}
Matrix diff_r_matrix(const TwoRepresentation& rep, TriDegree in_deg) {
    return assemble_matrix(&diff_r_terms, rep, in_deg, {in_deg.p, in_deg.q, in_deg.r + 1});
}

BisimplicialCochain omega_tot_zero(const CrossedModule& xm, const Field& f, long k) {
    if (k < 0) throw RangeError("total degree must be nonnegative");
    BisimplicialCochain c;
    c.k = k;
    for (long p = 0; p <= k; ++p) c.comp.push_back(vec_zero(f, domain_size(xm, p, k - p, 0)));
    return c;
}

namespace {

void check_bisimplicial_shape(const CrossedModule& xm, const BisimplicialCochain& c) {
    if (c.k < 0 || c.comp.size() != static_cast<std::size_t>(c.k + 1))
        throw ShapeError("total cochain needs one component per p = 0..k");
    for (long p = 0; p <= c.k; ++p)
        if (c.comp[static_cast<std::size_t>(p)].size() != domain_size(xm, p, c.k - p, 0))
            throw ShapeError("total cochain component has wrong domain size");
}

}  // namespace

BisimplicialCochain omega_tot_diff(const CrossedModule& xm, const BisimplicialCochain& c) {
    check_bisimplicial_shape(xm, c);
    const Field f = c.comp.front().front().field();
    BisimplicialCochain out = omega_tot_zero(xm, f, c.k + 1);
    for (long pp = 0; pp <= out.k; ++pp) {
        const long qq = out.k - pp;
        const GridDomain out_dom(xm, pp, qq, 0);
        Vec& dst = out.comp[static_cast<std::size_t>(pp)];
        for (std::size_t i = 0; i < out_dom.size(); ++i) {
            const GridPoint y = out_dom.decode(i);
            Scalar acc = Scalar::zero(f);
            if (pp >= 1) {
                // (-1)^{p_in} times the alternating row-wise face sum from
                // component (pp-1, qq).
                const GridDomain src_dom(xm, pp - 1, qq, 0);
                const Vec& src = c.comp[static_cast<std::size_t>(pp - 1)];
                Scalar part = Scalar::zero(f);
                for (long k2 = 0; k2 <= pp; ++k2) {
                    const Scalar v = src[src_dom.encode(grid_face_p(xm, k2, y))];
                    part = alt(k2) == 1 ? part + v : part - v;
                }
                acc = (pp - 1) % 2 == 0 ? acc + part : acc - part;
            }
            if (qq >= 1) {
                // (-1)^{pp} times the alternating row-merge face sum from
                // component (pp, qq-1).
                const GridDomain src_dom(xm, pp, qq - 1, 0);
                const Vec& src = c.comp[static_cast<std::size_t>(pp)];
                Scalar part = Scalar::zero(f);
                for (long j = 0; j <= qq; ++j) {
                    const Scalar v = src[src_dom.encode(grid_face_q(xm, j, y))];
                    part = alt(j) == 1 ? part + v : part - v;
                }
                acc = pp % 2 == 0 ? acc + part : acc - part;
            }
            dst[i] = acc;
        }
    }
    return out;
}

Matrix omega_tot_matrix(const CrossedModule& xm, const Field& f, long k) {
    std::size_t in_size = 0, out_size = 0;
    for (long p = 0; p <= k; ++p) in_size += domain_size(xm, p, k - p, 0);
    for (long p = 0; p <= k + 1; ++p) out_size += domain_size(xm, p, k + 1 - p, 0);
    Matrix m(f, out_size, in_size);
    std::size_t col = 0;
    BisimplicialCochain basis = omega_tot_zero(xm, f, k);
    for (long p = 0; p <= k; ++p) {
        Vec& comp = basis.comp[static_cast<std::size_t>(p)];
        for (std::size_t i = 0; i < comp.size(); ++i, ++col) {
            comp[i] = Scalar::one(f);
            const BisimplicialCochain img = omega_tot_diff(xm, basis);
            std::size_t row = 0;
            for (const Vec& oc : img.comp)
                for (const Scalar& s : oc) m.at(row++, col) = s;
            comp[i] = Scalar::zero(f);
        }
    }
    return m;
}

}  // namespace twocoh
