#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twocoh/errors.hpp"

namespace twocoh {

/// Coefficient field descriptor: the rationals (characteristic 0) or a prime
/// field F_p. Every scalar, vector and matrix carries its field; operations
/// that mix fields throw FieldError instead of silently coercing.
class Field {
public:
    Field() = default;  // rationals

    static Field rationals() { return Field(); }

    /// Prime field F_p. Requires 2 <= p < 2^31 and p prime, so that products
    /// of residues stay inside a signed 64-bit accumulator.
    static Field prime(std::int64_t p);

    bool is_rational() const { return p_ == 0; }
    std::int64_t characteristic() const { return p_; }

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    std::string to_string() const;  // "Q" or "F<p>"

private:
    std::int64_t p_ = 0;  // 0 encodes the rationals
};

/// An exact scalar: a reduced rational (positive denominator, lowest terms) or
/// a residue in [0, p). Arithmetic never rounds; equality is literal.
class Scalar {
public:
    /// Default-constructs the rational zero (containers need this); prefer
    /// zero(field) wherever a field is in scope.
    Scalar() : v_(mpq_class(0)) {}

    static Scalar zero(const Field& f) { return of(f, 0); }
    static Scalar one(const Field& f) { return of(f, 1); }

    /// The image of the integer n in the field.
    static Scalar of(const Field& f, std::int64_t n);

    /// The rational num/den in lowest terms. den must be nonzero.
    static Scalar rational(std::int64_t num, std::int64_t den);

    /// Parses the serialized form: over Q "a/b" (integer shorthand "a" is
    /// accepted on input), over F_p any integer, reduced into [0, p).
    static Scalar parse(const Field& f, const std::string& text);

    Field field() const;
    bool is_zero() const;

    /// The canonical residue in [0, p); throws FieldError for rationals.
    std::int64_t fp_value() const;

    /// Canonical serialization: always "a/b" over Q (b > 0, gcd(a,b) = 1),
    /// the decimal residue over F_p.
    std::string to_string() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws Error on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    struct Fp {
        std::int64_t v;  // in [0, p)
        std::int64_t p;
    };
    std::variant<mpq_class, Fp> v_;

    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(Fp f) : v_(f) {}

    static void require_same_field(const Scalar& a, const Scalar& b);
};

/// A coordinate vector over a fixed field.
using Vec = std::vector<Scalar>;

Vec vec_zero(const Field& f, std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);

/// Dense row-major matrix over an exact field. Zero-dimensional shapes
/// (0 x n, n x 0, 0 x 0) are first-class: maps into or out of the zero space
/// occur throughout (e.g. 2-vector spaces with W = 0).
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const Field& f, std::size_t n);

    /// Convenience for literals in tests: row-major integer entries.
    static Matrix from_rows(const Field& f, const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return e_[i * cols_ + j];
    }
    const Scalar& at(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return e_[i * cols_ + j];
    }

    bool is_zero() const;
    bool is_identity() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Vec apply(const Vec& v) const;  // matrix * column vector
    Vec col(std::size_t j) const;
    Vec row(std::size_t i) const;

    /// Accumulates `block` into this matrix with top-left corner (i0, j0).
    void add_block(std::size_t i0, std::size_t j0, const Matrix& block);

    std::optional<Matrix> inverse() const;
    bool invertible() const { return inverse().has_value(); }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

/// Reduced row-echelon form together with its pivot columns. Deterministic:
/// Gaussian elimination taking the first nonzero entry of each column as the
/// pivot (exact arithmetic needs no pivoting heuristics).
struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivots;
};
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact basis of the null space {v : m v = 0}, one vector per free column,
/// in increasing free-column order. Empty for injective maps.
std::vector<Vec> kernel_basis(const Matrix& m);

/// dim span(ker) - dim span(im), after verifying span(im) is contained in
/// span(ker) exactly; a containment failure means the complex the caller
/// took the spaces from is broken, and raises ContainmentError.
std::size_t quotient_dim(const std::vector<Vec>& ker, const std::vector<Vec>& im);

/// One exact solution of m x = b if the system is consistent (free variables
/// set to zero), otherwise nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace twocoh
