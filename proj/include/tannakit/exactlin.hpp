#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tannakit {

/// Base field of a computation: the rationals or a prime field F_p.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    long p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime_field(long p);

    bool operator==(const FieldSpec&) const = default;
    long characteristic() const { return kind == Kind::PrimeField ? p : 0; }
    std::string name() const;
};

/// Parses "Q", "F5", "F_5" into a FieldSpec.
FieldSpec parse_field(const std::string& text);

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field residues lie in [0, p).
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()) {}
    Scalar(long value, const FieldSpec& field);
    Scalar(const mpq_class& value, const FieldSpec& field);

    /// Parses "n" or "n/d".
    static Scalar parse(const std::string& text, const FieldSpec& field);

    const FieldSpec& field() const { return field_; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }

    std::string str() const;

private:
    mpq_class v_;
    FieldSpec field_;

    void normalize();
    void check_field(const Scalar& o) const;
};

/// Dense matrix over an exact field, row-major storage.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), field_(FieldSpec::rationals()) {}
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

    static Matrix identity(std::size_t n, const FieldSpec& field);
    /// Builds from row-major integer literals.
    static Matrix from_rows(const std::vector<std::vector<long>>& rows, const FieldSpec& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Scalar& s);
    void set(std::size_t i, std::size_t j, long v) { set(i, j, Scalar(v, field_)); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;

    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    Matrix column(std::size_t j) const;
    /// Columns [first, first+count) as a new matrix.
    Matrix columns(std::size_t first, std::size_t count) const;
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    /// Block-diagonal juxtaposition (this ⊕ o).
    Matrix direct_sum(const Matrix& o) const;

    /// Rows permuted so that row i of the result is row perm[i] of the input.
    Matrix rows_reindexed(const std::vector<std::size_t>& perm) const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> entries_;
};

/// Kronecker product with row-major index pairing (i,j) -> i*dim2 + j.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b, const Matrix& c);

/// Reduced row echelon form; pivot selection scans rows top to bottom in each
/// column left to right, so the output is reproducible. pivot_cols receives
/// the pivot column of every nonzero row.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0} as columns in reduced column-echelon form.
Matrix kernel_basis(const Matrix& m);

/// Basis of the column space as columns in reduced column-echelon form.
Matrix image_basis(const Matrix& m);

/// A solution x of a x = b with free variables pinned to zero, or nullopt if
/// the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Presentation of k^n / span(columns): projection q (size (n-r) x n) and a
/// section s with q s = id and q·span = 0.
struct QuotientPresentation {
    Matrix projection;
    Matrix section;
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
};
QuotientPresentation quotient_by_span(const Matrix& span);

/// Row-index permutation realizing a reordering of tensor factors: dims are
/// the factor dimensions, factor_order lists which input factor lands in each
/// output slot. Entry k of the result is the input index mapped to output k.
std::vector<std::size_t> tensor_factor_permutation(const std::vector<std::size_t>& dims,
                                                   const std::vector<std::size_t>& factor_order);

/// True iff the square matrix is invertible.
bool is_invertible(const Matrix& m);

/// Inverse of a square invertible matrix.
Matrix inverse(const Matrix& m);

/// Checks the column spans of two matrices with equal row count coincide.
bool same_column_span(const Matrix& a, const Matrix& b);

/// Left inverse of a matrix with full column rank (l·m = id).
Matrix left_inverse(const Matrix& m);

}  // namespace tannakit
