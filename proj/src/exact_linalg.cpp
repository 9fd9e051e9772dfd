#include "twocoh/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace twocoh {

namespace {

std::int64_t mod_into(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid on residues; returns the inverse of a mod p.
std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw Error("residue has no inverse modulo " + std::to_string(p));
    return mod_into(t, p);
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
        throw FieldError("not a supported prime modulus: " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::of(const Field& f, std::int64_t n) {
    if (f.is_rational()) return Scalar(mpq_class(static_cast<long>(n)));
    return Scalar(Fp{mod_into(n, f.characteristic()), f.characteristic()});
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    const auto bad = [&](const std::string& why) {
        return ParseError("bad scalar \"" + text + "\": " + why);
    };
    const auto parse_int = [&](const std::string& s) -> mpz_class {
        if (s.empty()) throw bad("empty integer");
        try {
            return mpz_class(s, 10);
        } catch (const std::invalid_argument&) {
            throw bad("not an integer");
        }
    };
    const auto slash = text.find('/');
    if (f.is_rational()) {
        mpz_class num = parse_int(slash == std::string::npos ? text : text.substr(0, slash));
        mpz_class den = slash == std::string::npos ? mpz_class(1) : parse_int(text.substr(slash + 1));
        if (den == 0) throw bad("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(std::move(q));
    }
    if (slash != std::string::npos) throw bad("fraction in a prime field");
    mpz_class n = parse_int(text);
    mpz_class r = n % f.characteristic();
    std::int64_t v = r.get_si();
    return Scalar(Fp{mod_into(v, f.characteristic()), f.characteristic()});
}

Field Scalar::field() const {
    if (std::holds_alternative<mpq_class>(v_)) return Field::rationals();
    return Field::prime(std::get<Fp>(v_).p);
}

bool Scalar::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<Fp>(v_).v == 0;
}

std::int64_t Scalar::fp_value() const {
    if (std::holds_alternative<mpq_class>(v_))
        throw FieldError("fp_value is only defined over prime fields");
    return std::get<Fp>(v_).v;
}

std::string Scalar::to_string() const {
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return q->get_num().get_str() + "/" + q->get_den().get_str();
    return std::to_string(std::get<Fp>(v_).v);
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
    const bool aq = std::holds_alternative<mpq_class>(a.v_);
    const bool bq = std::holds_alternative<mpq_class>(b.v_);
    if (aq != bq || (!aq && std::get<Fp>(a.v_).p != std::get<Fp>(b.v_).p))
        throw FieldError("mixing scalars over " + a.field().to_string() + " and " +
                         b.field().to_string());
}

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
    const Fp f = std::get<Fp>(v_);
    return Scalar(Fp{f.v == 0 ? 0 : f.p - f.v, f.p});
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
    const Fp f = std::get<Fp>(v_);
    return Scalar(Fp{inv_mod(f.v, f.p), f.p});
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    if (const auto* q = std::get_if<mpq_class>(&a.v_))
        return Scalar(mpq_class(*q + std::get<mpq_class>(b.v_)));
    const auto fa = std::get<Scalar::Fp>(a.v_), fb = std::get<Scalar::Fp>(b.v_);
    return Scalar(Scalar::Fp{(fa.v + fb.v) % fa.p, fa.p});
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    if (const auto* q = std::get_if<mpq_class>(&a.v_))
        return Scalar(mpq_class(*q * std::get<mpq_class>(b.v_)));
    const auto fa = std::get<Scalar::Fp>(a.v_), fb = std::get<Scalar::Fp>(b.v_);
    return Scalar(Scalar::Fp{(fa.v * fb.v) % fa.p, fa.p});
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    if (const auto* q = std::get_if<mpq_class>(&a.v_)) return *q == std::get<mpq_class>(b.v_);
    return std::get<Scalar::Fp>(a.v_).v == std::get<Scalar::Fp>(b.v_).v;
}

// ---------------------------------------------------------------------------
// Vec helpers

Vec vec_zero(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

static void require_same_size(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw ShapeError("vector sizes " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
}

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = -x;
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = c * x;
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Scalar& x) { return x.is_zero(); });
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::of(f, rows[i][j]);
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

static void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldError("mixing matrices over different fields");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix shape mismatch");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.rows_; ++i)
        for (std::size_t j = 0; j < r.cols_; ++j) r.at(i, j) += b.at(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldError("mixing matrices over different fields");
    if (a.cols() != b.rows()) throw ShapeError("inner dimensions disagree");
    Matrix r(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.e_) x = c * x;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field() || a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return a.e_ == b.e_ ? true
                        : std::equal(a.e_.begin(), a.e_.end(), b.e_.begin(),
                                     [](const Scalar& x, const Scalar& y) { return x == y; });
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector size mismatch");
    Vec r = vec_zero(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (!a.is_zero()) r[i] += a * v[j];
        }
    return r;
}

Vec Matrix::col(std::size_t j) const {
    assert(j < cols_);
    Vec r;
    r.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r.push_back(at(i, j));
    return r;
}

Vec Matrix::row(std::size_t i) const {
    assert(i < rows_);
    Vec r;
    r.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

void Matrix::add_block(std::size_t i0, std::size_t j0, const Matrix& block) {
    if (field_ != block.field()) throw FieldError("mixing matrices over different fields");
    if (i0 + block.rows() > rows_ || j0 + block.cols() > cols_)
        throw ShapeError("block out of bounds");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) at(i0 + i, j0 + j) += block.at(i, j);
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    // Row-reduce [A | I]; A is invertible iff the left block reduces to I.
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar::one(field_);
    }
    const RrefResult r = rref(aug);
    if (r.pivots.size() != rows_) return std::nullopt;
    for (std::size_t i = 0; i < rows_; ++i)
        if (r.pivots[i] != i) return std::nullopt;
    Matrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = r.mat.at(i, cols_ + j);
    return inv;
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        // First nonzero entry at or below pivot_row — deterministic by design.
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < r.cols(); ++j)
                std::swap(r.at(sel, j), r.at(pivot_row, j));
        const Scalar inv = r.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row || r.at(i, col).is_zero()) continue;
            const Scalar factor = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) -= factor * r.at(pivot_row, j);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec v = vec_zero(m.field(), m.cols());
        v[j] = Scalar::one(m.field());
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Stacks the vectors as rows; requires consistent sizes and fields.
Matrix rows_matrix(const std::vector<Vec>& vs, const Field& f, std::size_t ambient) {
    Matrix m(f, vs.size(), ambient);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].size() != ambient) throw ShapeError("span vectors of unequal length");
        for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vs[i][j];
    }
    return m;
}

}  // namespace

std::size_t quotient_dim(const std::vector<Vec>& ker, const std::vector<Vec>& im) {
    if (ker.empty() && im.empty()) return 0;
    const Vec& probe = ker.empty() ? im.front() : ker.front();
    if (probe.empty()) return 0;  // ambient space {0}: both spans are {0}
    const Field f = probe.front().field();
    const std::size_t ambient = probe.size();

    const RrefResult rk = rref(rows_matrix(ker, f, ambient));
    // Reduce each image vector against the kernel's echelon rows; a nonzero
    // remainder means im is not contained in ker.
    for (const Vec& w : im) {
        if (w.size() != ambient) throw ShapeError("span vectors of unequal length");
        Vec v = w;
        for (std::size_t i = 0; i < rk.pivots.size(); ++i) {
            const Scalar c = v[rk.pivots[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ambient; ++j) v[j] -= c * rk.mat.at(i, j);
        }
        if (!vec_is_zero(v))
            throw ContainmentError("image vector outside the kernel span");
    }
    const std::size_t rank_im = im.empty() ? 0 : rref(rows_matrix(im, f, ambient)).pivots.size();
    return rk.pivots.size() - rank_im;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw ShapeError("right-hand side length mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const RrefResult r = rref(aug);
    for (std::size_t p : r.pivots)
        if (p == m.cols()) return std::nullopt;  // a row reduced to 0 = 1
    Vec x = vec_zero(m.field(), m.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.mat.at(i, m.cols());
    return x;
}

}  // namespace twocoh
