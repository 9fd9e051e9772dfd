#include "twocoh/rep_core.hpp"

#include <cassert>

namespace twocoh {

namespace {

Matrix eye(const TwoVectorSpace& vs, std::size_t n) { return Matrix::identity(vs.field(), n); }

/// I + A phi (on W) and I + phi A (on V).
Matrix one_plus_a_phi(const TwoVectorSpace& vs, const Matrix& a) {
    return eye(vs, static_cast<std::size_t>(vs.dim_w())) + a * vs.phi;
}
Matrix one_plus_phi_a(const TwoVectorSpace& vs, const Matrix& a) {
    return eye(vs, static_cast<std::size_t>(vs.dim_v())) + vs.phi * a;
}

}  // namespace

bool glphi_object_valid(const TwoVectorSpace& vs, const GLPhiObject& o) {
    if (o.F.rows() != static_cast<std::size_t>(vs.dim_w()) || o.F.rows() != o.F.cols())
        return false;
    if (o.f.rows() != static_cast<std::size_t>(vs.dim_v()) || o.f.rows() != o.f.cols())
        return false;
    return o.F.invertible() && o.f.invertible() && vs.phi * o.F == o.f * vs.phi;
}

bool glphi_arrow_valid(const TwoVectorSpace& vs, const GLPhiArrow& a) {
    if (a.A.rows() != static_cast<std::size_t>(vs.dim_w()) ||
        a.A.cols() != static_cast<std::size_t>(vs.dim_v()))
        return false;
    return one_plus_a_phi(vs, a.A).invertible() && one_plus_phi_a(vs, a.A).invertible();
}

GLPhiArrow glphi_odot(const TwoVectorSpace& vs, const GLPhiArrow& a1, const GLPhiArrow& a2) {
    GLPhiArrow out{a1.A + a2.A + a1.A * vs.phi * a2.A};
    assert(glphi_arrow_valid(vs, out));  // closure is a theorem
    return out;
}

GLPhiArrow glphi_dagger(const TwoVectorSpace& vs, const GLPhiArrow& a) {
    auto inv = one_plus_phi_a(vs, a.A).inverse();
    assert(inv.has_value());
    return GLPhiArrow{-(a.A * *inv)};
}

GLPhiObject glphi_delta(const TwoVectorSpace& vs, const GLPhiArrow& a) {
    return GLPhiObject{one_plus_a_phi(vs, a.A), one_plus_phi_a(vs, a.A)};
}

GLPhiArrow glphi_act(const TwoVectorSpace& vs, const GLPhiArrow& a, const GLPhiObject& o) {
    auto finv = o.F.inverse();
    if (!finv) throw Error("object of the general linear 2-group must be invertible");
    GLPhiArrow out{*finv * a.A * o.f};
    assert(glphi_arrow_valid(vs, out));
    return out;
}

namespace {

/// Enumerate all matrices of a given shape over F_p, in lexicographic order of
/// the entry residues (entry (0,0) least significant).
class MatrixEnum {
public:
    MatrixEnum(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols) {
        const auto p = static_cast<std::size_t>(f.characteristic());
        count_ = 1;
        for (std::size_t i = 0; i < rows * cols; ++i) count_ *= p;
    }
    std::size_t count() const { return count_; }
    Matrix get(std::size_t index) const {
        const auto p = static_cast<std::size_t>(field_.characteristic());
        Matrix m(field_, rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                m.at(i, j) = Scalar::of(field_, static_cast<std::int64_t>(index % p));
                index /= p;
            }
        return m;
    }

private:
    Field field_;
    std::size_t rows_, cols_, count_;
};

Matrix random_mat(const Field& f, std::size_t rows, std::size_t cols, SplitMix64& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = f.is_rational()
                             ? Scalar::rational(rng.range(-3, 3), rng.range(1, 2))
                             : Scalar::of(f, rng.range(0, f.characteristic() - 1));
    return m;
}

GLPhiArrow random_glphi_arrow(const TwoVectorSpace& vs, SplitMix64& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        GLPhiArrow a{random_mat(vs.field(), static_cast<std::size_t>(vs.dim_w()),
                                static_cast<std::size_t>(vs.dim_v()), rng)};
        if (glphi_arrow_valid(vs, a)) return a;
    }
    throw Error("could not sample a valid arrow of the general linear 2-group");
}

/// Objects sampled as products of delta-images and nonzero scalar pairs
/// (c I, c I); both kinds satisfy the intertwining condition, and the
/// condition is closed under products.
GLPhiObject random_glphi_object(const TwoVectorSpace& vs, SplitMix64& rng) {
    GLPhiObject o{eye(vs, static_cast<std::size_t>(vs.dim_w())),
                  eye(vs, static_cast<std::size_t>(vs.dim_v()))};
    const long factors = rng.range(1, 3);
    for (long k = 0; k < factors; ++k) {
        GLPhiObject d = glphi_delta(vs, random_glphi_arrow(vs, rng));
        Scalar c = Scalar::zero(vs.field());
        while (c.is_zero())
            c = vs.field().is_rational()
                    ? Scalar::rational(rng.range(-3, 3), rng.range(1, 2))
                    : Scalar::of(vs.field(), rng.range(0, vs.field().characteristic() - 1));
        o = GLPhiObject{o.F * d.F * (c * eye(vs, static_cast<std::size_t>(vs.dim_w()))),
                        o.f * d.f * (c * eye(vs, static_cast<std::size_t>(vs.dim_v())))};
    }
    assert(glphi_object_valid(vs, o));
    return o;
}

std::optional<RepViolation> check_glphi_pair(const TwoVectorSpace& vs, const GLPhiArrow& a,
                                             const GLPhiObject& o, long tag) {
    // Equivariance: delta(a^o) = o^{-1} delta(a) o, componentwise.
    GLPhiArrow acted = glphi_act(vs, a, o);
    GLPhiObject lhs = glphi_delta(vs, acted);
    auto finv = o.F.inverse();
    auto fsmallinv = o.f.inverse();
    GLPhiObject da = glphi_delta(vs, a);
    if (lhs.F != *finv * da.F * o.F || lhs.f != *fsmallinv * da.f * o.f)
        return RepViolation{"glphi_equivariance", {tag}};
    return std::nullopt;
}

std::optional<RepViolation> check_glphi_peiffer(const TwoVectorSpace& vs, const GLPhiArrow& a1,
                                                const GLPhiArrow& a2, long tag) {
    GLPhiArrow lhs = glphi_act(vs, a1, glphi_delta(vs, a2));
    GLPhiArrow rhs = glphi_odot(vs, glphi_odot(vs, glphi_dagger(vs, a2), a1), a2);
    if (lhs.A != rhs.A) return RepViolation{"glphi_peiffer", {tag}};
    return std::nullopt;
}

}  // namespace

std::optional<RepViolation> validate_glphi_crossed_module(const TwoVectorSpace& vs,
                                                          SplitMix64& rng, int samples) {
    const Field& f = vs.field();
    const std::size_t dw = static_cast<std::size_t>(vs.dim_w());
    const std::size_t dv = static_cast<std::size_t>(vs.dim_v());
    bool exhaustive = false;
    if (!f.is_rational()) {
        const double p = static_cast<double>(f.characteristic());
        double object_count = 1, arrow_count = 1;
        for (std::size_t i = 0; i < dw * dw + dv * dv; ++i) object_count *= p;
        for (std::size_t i = 0; i < dw * dv; ++i) arrow_count *= p;
        exhaustive = object_count <= 2e5 && arrow_count <= 1e4;
    }
    if (exhaustive) {
        std::vector<GLPhiArrow> arrows;
        MatrixEnum ae(f, dw, dv);
        for (std::size_t i = 0; i < ae.count(); ++i) {
            GLPhiArrow a{ae.get(i)};
            if (glphi_arrow_valid(vs, a)) arrows.push_back(a);
        }
        std::vector<GLPhiObject> objects;
        MatrixEnum fe(f, dw, dw), ge(f, dv, dv);
        for (std::size_t i = 0; i < fe.count(); ++i)
            for (std::size_t j = 0; j < ge.count(); ++j) {
                GLPhiObject o{fe.get(i), ge.get(j)};
                if (glphi_object_valid(vs, o)) objects.push_back(o);
            }
        long tag = 0;
        for (const auto& a : arrows)
            for (const auto& o : objects)
                if (auto v = check_glphi_pair(vs, a, o, tag++)) return v;
        tag = 0;
        for (const auto& a1 : arrows)
            for (const auto& a2 : arrows)
                if (auto v = check_glphi_peiffer(vs, a1, a2, tag++)) return v;
        return std::nullopt;
    }
    for (int s = 0; s < samples; ++s) {
        GLPhiArrow a1 = random_glphi_arrow(vs, rng);
        GLPhiArrow a2 = random_glphi_arrow(vs, rng);
        GLPhiObject o = random_glphi_object(vs, rng);
        if (auto v = check_glphi_pair(vs, a1, o, s)) return v;
        if (auto v = check_glphi_peiffer(vs, a1, a2, s)) return v;
    }
    return std::nullopt;
}

TwoRepresentation::TwoRepresentation(CrossedModule base, TwoVectorSpace vs,
                                     std::vector<Matrix> rho00, std::vector<Matrix> rho01,
                                     std::vector<Matrix> rho1)
    : base_(std::move(base)),
      vs_(std::move(vs)),
      rho00_(std::move(rho00)),
      rho01_(std::move(rho01)),
      rho1_(std::move(rho1)) {
    const auto nh = static_cast<std::size_t>(base_.H().order());
    const auto ng = static_cast<std::size_t>(base_.G().order());
    const auto dv = static_cast<std::size_t>(vs_.dim_v());
    const auto dw = static_cast<std::size_t>(vs_.dim_w());
    if (rho00_.size() != nh || rho01_.size() != nh)
        throw ShapeError("object representation tables must be indexed by H");
    if (rho1_.size() != ng) throw ShapeError("arrow representation table must be indexed by G");
    for (const Matrix& m : rho00_)
        if (m.rows() != dv || m.cols() != dv || m.field() != field())
            throw ShapeError("rho00 entries must be square on V over the declared field");
    for (const Matrix& m : rho01_)
        if (m.rows() != dw || m.cols() != dw || m.field() != field())
            throw ShapeError("rho01 entries must be square on W over the declared field");
    for (const Matrix& m : rho1_)
        if (m.rows() != dw || m.cols() != dv || m.field() != field())
            throw ShapeError("rho1 entries must map V to W over the declared field");
}

std::vector<RepViolation> TwoRepresentation::validate() const {
    std::vector<RepViolation> out;
    const long ng = base_.G().order(), nh = base_.H().order();
    auto first = [&](const std::string& rule, auto&& probe) {
        if (auto w = probe()) out.push_back(RepViolation{rule, *w});
    };
    using W = std::optional<std::vector<long>>;
    first("phi_intertwine", [&]() -> W {
        for (long h = 0; h < nh; ++h)
            if (rho00(h) * vs_.phi != vs_.phi * rho01(h)) return {{h}};
        return std::nullopt;
    });
    first("object_hom_v", [&]() -> W {
        if (!rho00(FiniteGroup::id).is_identity()) return {{FiniteGroup::id}};
        for (long h1 = 0; h1 < nh; ++h1)
            for (long h2 = 0; h2 < nh; ++h2)
                if (rho00(base_.H().mul(h1, h2)) != rho00(h1) * rho00(h2)) return {{h1, h2}};
        return std::nullopt;
    });
    first("object_hom_w", [&]() -> W {
        if (!rho01(FiniteGroup::id).is_identity()) return {{FiniteGroup::id}};
        for (long h1 = 0; h1 < nh; ++h1)
            for (long h2 = 0; h2 < nh; ++h2)
                if (rho01(base_.H().mul(h1, h2)) != rho01(h1) * rho01(h2)) return {{h1, h2}};
        return std::nullopt;
    });
    first("product_rule", [&]() -> W {
        for (long g0 = 0; g0 < ng; ++g0)
            for (long g1 = 0; g1 < ng; ++g1)
                if (rho1(base_.G().mul(g0, g1)) !=
                    rho1(g0) + rho1(g1) + rho1(g0) * vs_.phi * rho1(g1))
                    return {{g0, g1}};
        return std::nullopt;
    });
    first("structural_map_compat", [&]() -> W {
        const Matrix iv = Matrix::identity(field(), static_cast<std::size_t>(dim_v()));
        const Matrix iw = Matrix::identity(field(), static_cast<std::size_t>(dim_w()));
        for (long g = 0; g < ng; ++g) {
            if (rho00(base_.i(g)) != iv + vs_.phi * rho1(g)) return {{g}};
            if (rho01(base_.i(g)) != iw + rho1(g) * vs_.phi) return {{g}};
        }
        return std::nullopt;
    });
    first("action_compat", [&]() -> W {
        for (long g = 0; g < ng; ++g)
            for (long h = 0; h < nh; ++h)
                if (rho1(base_.act(g, h)) != rho01_inv(h) * rho1(g) * rho00(h)) return {{g, h}};
        return std::nullopt;
    });
    first("invertibility", [&]() -> W {
        for (long h = 0; h < nh; ++h) {
            if (rho00(h) * rho00_inv(h) != Matrix::identity(field(), rho00(h).rows()))
                return {{h}};
            if (rho01(h) * rho01_inv(h) != Matrix::identity(field(), rho01(h).rows()))
                return {{h}};
        }
        return std::nullopt;
    });
    return out;
}

Matrix honest_rep(const TwoRepresentation& rep, const Arrow& a) {
    const auto dw = static_cast<std::size_t>(rep.dim_w());
    const auto dv = static_cast<std::size_t>(rep.dim_v());
    Matrix m(rep.field(), dw + dv, dw + dv);
    const CrossedModule& xm = rep.base();
    m.add_block(0, 0, rep.rho01(xm.H().mul(a.h, xm.i(a.g))));
    m.add_block(0, dw, rep.rho01(a.h) * rep.rho1(a.g));
    m.add_block(dw, dw, rep.rho00(a.h));
    return m;
}

VectorCodec::VectorCodec(const Field& field, long dim) : field_(field), dim_(dim) {
    if (field.is_rational()) throw FieldError("vector enumeration needs a finite field");
    if (dim < 0) throw RangeError("dimension must be nonnegative");
    const auto p = static_cast<std::size_t>(field.characteristic());
    constexpr std::size_t cap = std::size_t{1} << 48;
    size_ = 1;
    for (long i = 0; i < dim; ++i) {
        if (size_ > cap / p) throw RangeError("vector space too large to enumerate");
        size_ *= p;
    }
}

std::size_t VectorCodec::encode(const Vec& v) const {
    if (static_cast<long>(v.size()) != dim_) throw ShapeError("vector has the wrong dimension");
    const auto p = static_cast<std::size_t>(field_.characteristic());
    std::size_t index = 0, stride = 1;
    for (const Scalar& c : v) {
        index += static_cast<std::size_t>(c.fp_value()) * stride;
        stride *= p;
    }
    return index;
}

Vec VectorCodec::decode(std::size_t index) const {
    if (index >= size_) throw IndexError("vector index out of range");
    const auto p = static_cast<std::size_t>(field_.characteristic());
    Vec v;
    v.reserve(static_cast<std::size_t>(dim_));
    for (long i = 0; i < dim_; ++i) {
        v.push_back(Scalar::of(field_, static_cast<std::int64_t>(index % p)));
        index /= p;
    }
    return v;
}

CrossedModule semidirect_2group(const TwoRepresentation& rep) {
    if (rep.field().is_rational())
        throw FieldError("the semidirect product is finite only over a prime field");
    const CrossedModule& xm = rep.base();
    VectorCodec wc(rep.field(), rep.dim_w()), vc(rep.field(), rep.dim_v());
    const long ng = xm.G().order(), nh = xm.H().order();
    const auto nw = static_cast<long>(wc.size()), nv = static_cast<long>(vc.size());
    const long n1 = ng * nw, n0 = nh * nv;

    std::vector<std::vector<long>> t1(static_cast<std::size_t>(n1),
                                      std::vector<long>(static_cast<std::size_t>(n1)));
    for (long a = 0; a < n1; ++a) {
        const long ga = a % ng;
        const Vec wa = wc.decode(static_cast<std::size_t>(a / ng));
        const Matrix& twist = rep.rho01(xm.i(ga));
        for (long b = 0; b < n1; ++b) {
            const long gb = b % ng;
            const Vec wb = wc.decode(static_cast<std::size_t>(b / ng));
            t1[a][b] = xm.G().mul(ga, gb) +
                       ng * static_cast<long>(wc.encode(vec_add(wa, twist.apply(wb))));
        }
    }
    std::vector<std::vector<long>> t0(static_cast<std::size_t>(n0),
                                      std::vector<long>(static_cast<std::size_t>(n0)));
    for (long a = 0; a < n0; ++a) {
        const long ha = a % nh;
        const Vec va = vc.decode(static_cast<std::size_t>(a / nh));
        const Matrix& twist = rep.rho00(ha);
        for (long b = 0; b < n0; ++b) {
            const long hb = b % nh;
            const Vec vb = vc.decode(static_cast<std::size_t>(b / nh));
            t0[a][b] = xm.H().mul(ha, hb) +
                       nh * static_cast<long>(vc.encode(vec_add(va, twist.apply(vb))));
        }
    }
    FiniteGroup e1 = FiniteGroup::from_table(std::move(t1));
    FiniteGroup e0 = FiniteGroup::from_table(std::move(t0));

    std::vector<long> eps(static_cast<std::size_t>(n1));
    for (long a = 0; a < n1; ++a) {
        const long g = a % ng;
        const Vec w = wc.decode(static_cast<std::size_t>(a / ng));
        eps[a] = xm.i(g) + nh * static_cast<long>(vc.encode(rep.vs().phi.apply(w)));
    }
    std::vector<std::vector<long>> action(static_cast<std::size_t>(n1),
                                          std::vector<long>(static_cast<std::size_t>(n0)));
    for (long a = 0; a < n1; ++a) {
        const long g = a % ng;
        const Vec w = wc.decode(static_cast<std::size_t>(a / ng));
        for (long b = 0; b < n0; ++b) {
            const long h = b % nh;
            const Vec v = vc.decode(static_cast<std::size_t>(b / nh));
            const Vec moved = rep.rho01_inv(h).apply(vec_add(w, rep.rho1(g).apply(v)));
            action[a][b] = xm.act(g, h) + ng * static_cast<long>(wc.encode(moved));
        }
    }
    return CrossedModule(std::move(e1), std::move(e0), std::move(eps), std::move(action));
}

namespace {

/// An arrow of the semidirect 2-group with exact vector components, used to
/// evaluate the curvature without enumerating the (possibly infinite) group.
struct SdArrow {
    long g, h;
    Vec w, v;
};

/// Target of (g, h; w, v): base h i(g), fiber v + rho00(h) phi w.
std::pair<long, Vec> sd_target(const TwoRepresentation& rep, const SdArrow& a) {
    const CrossedModule& xm = rep.base();
    return {xm.H().mul(a.h, xm.i(a.g)),
            vec_add(a.v, rep.rho00(a.h).apply(rep.vs().phi.apply(a.w)))};
}

SdArrow sd_hcomp(const TwoRepresentation& rep, const SdArrow& first, const SdArrow& second) {
    auto [th, tv] = sd_target(rep, second);
    if (first.h != th || first.v != tv)
        throw ComposabilityError("semidirect arrows are not composable");
    const CrossedModule& xm = rep.base();
    // Arrow-group part: (second) * (first) in G x| W.
    return SdArrow{xm.G().mul(second.g, first.g), second.h,
                   vec_add(second.w, rep.rho01(xm.i(second.g)).apply(first.w)), second.v};
}

}  // namespace

std::size_t RuthData::omega_index(const CrossedModule& xm, long g1, long g2, long h) const {
    const auto ng = static_cast<std::size_t>(xm.G().order());
    return (static_cast<std::size_t>(g1) * ng + static_cast<std::size_t>(g2)) *
               static_cast<std::size_t>(xm.H().order()) +
           static_cast<std::size_t>(h);
}

RuthData ruth_data(const TwoRepresentation& rep) {
    const CrossedModule& xm = rep.base();
    const long ng = xm.G().order(), nh = xm.H().order();
    const auto dv = static_cast<std::size_t>(rep.dim_v());
    const auto dw = static_cast<std::size_t>(rep.dim_w());
    RuthData out;
    for (long h = 0; h < nh; ++h) out.varrho.push_back(rep.rho00(h) * rep.vs().phi);
    out.base_shift.assign(static_cast<std::size_t>(ng),
                          std::vector<long>(static_cast<std::size_t>(nh)));
    for (long g = 0; g < ng; ++g) {
        std::vector<Matrix> fibers;
        for (long h = 0; h < nh; ++h) {
            out.base_shift[g][h] = xm.H().mul(h, xm.i(g));
            fibers.push_back(rep.rho01(xm.i(xm.G().inv(g))));
        }
        out.delta_w_fiber.push_back(std::move(fibers));
    }
    // Curvature at (g1, g2, h) applied to v: take the splitting of the long
    // composite minus the composite of splittings, then translate back along
    // the zero arrow over the inverse. Computed column by column.
    const Vec zw = vec_zero(rep.field(), dw);
    for (long g1 = 0; g1 < ng; ++g1)
        for (long g2 = 0; g2 < ng; ++g2)
            for (long h = 0; h < nh; ++h) {
                Matrix omega(rep.field(), dw, dv);
                const long gg = xm.G().mul(g2, g1);
                for (std::size_t k = 0; k < dv; ++k) {
                    Vec ek = vec_zero(rep.field(), dv);
                    ek[k] = Scalar::one(rep.field());
                    SdArrow whole{gg, h, zw, ek};
                    SdArrow upper{g1, xm.H().mul(h, xm.i(g2)), zw, ek};
                    SdArrow lower{g2, h, zw, ek};
                    SdArrow composite = sd_hcomp(rep, upper, lower);
                    if (whole.g != composite.g || whole.h != composite.h)
                        throw Error("curvature terms live over different arrows");
                    SdArrow diff{whole.g, whole.h, vec_sub(whole.w, composite.w),
                                 vec_sub(whole.v, composite.v)};
                    if (!vec_is_zero(diff.v))
                        throw Error("curvature difference has a nonzero base component");
                    const Arrow inv_arrow = arrow_iota(xm, Arrow{gg, h});
                    SdArrow zero_inv{inv_arrow.g, inv_arrow.h, vec_zero(rep.field(), dw),
                                     vec_zero(rep.field(), dv)};
                    SdArrow shifted = sd_hcomp(rep, diff, zero_inv);
                    if (shifted.g != FiniteGroup::id)
                        throw Error("curvature did not land over a unit arrow");
                    for (std::size_t i = 0; i < dw; ++i) omega.at(i, k) = shifted.w[i];
                }
                if (!omega.is_zero()) throw Error("curvature of the splitting is nonzero");
                out.omega.push_back(std::move(omega));
            }
    return out;
}

}  // namespace twocoh
