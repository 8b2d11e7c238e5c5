#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cofrob/scalar.hpp"

namespace cofrob {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    /// Integer literal convenience for tests and built-in data.
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    const std::vector<Scalar>& entries() const { return data_; }

    Matrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix m);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    /// Nested-array rendering, e.g. [[1,0],[0,-1/2]].
    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Row vector times matrix.
Vector operator*(const Vector& v, const Matrix& a);
Matrix kronecker(const Matrix& a, const Matrix& b);
/// Sum over i of coeffs[i] * mats[i].
Matrix linear_combination(std::span<const Matrix> mats, std::span<const Scalar> coeffs);

/// Reduced row-echelon form: nonzero rows only, with their pivot columns.
struct Echelon {
    Matrix rows;
    std::vector<std::size_t> pivots;
};

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

class Subspace;

/// Incremental Gauss-Jordan on sparse rows. Rows are reduced against the
/// current pivots as they arrive, so very tall, mostly redundant systems
/// cost roughly (rank x row length) per row.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols);

    /// Returns true if the row was independent of the rows seen so far.
    bool add(SparseRow row);
    bool add(const Vector& row);

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against the current pivots; zero iff v is in the row space.
    SparseRow reduce(SparseRow v) const;

    Echelon echelon() const;
    /// Solutions x of (row . x) = 0 for every row added.
    Subspace nullspace() const;

private:
    void back_substitute(std::vector<SparseRow>& rows) const;

    std::size_t cols_;
    std::vector<SparseRow> rows_;             // echelon, leading entry 1
    std::vector<std::ptrdiff_t> pivot_row_;   // column -> index into rows_, or -1
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Some x with a * x = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
Scalar det(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
Subspace kernel(const Matrix& a);

/// Coefficients p_0..p_n of det(t I - a), lowest degree first.
std::vector<Scalar> characteristic_polynomial(const Matrix& a);
/// Distinct rational roots, ascending. Divisors of the extreme integer
/// coefficients are found by trial division up to `trial_limit`; a cofactor
/// left above that is treated as prime, so roots can be missed on very large
/// coefficients.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly, unsigned long trial_limit = 1000000);

/// Subspace of k^n held by its reduced row-echelon basis, so equality of
/// subspaces is equality of the stored matrices.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);
    /// Takes an already reduced basis. Used by RowReducer.
    static Subspace from_echelon(std::size_t ambient, Echelon e);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<Vector> vectors() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersection(const Subspace& other) const;
    /// Vectors z with dot(z, v) = 0 for all v in this subspace.
    Subspace annihilator() const;
    /// Image under the linear map with matrix `map` (acting on columns).
    Subspace image(const Matrix& map) const;
    /// {x : map * x in this subspace}.
    Subspace preimage(const Matrix& map) const;
    /// This (x) k^m and k^m (x) this inside k^(n*m), index i*m + j.
    Subspace tensor_right_full(std::size_t m) const;
    Subspace tensor_left_full(std::size_t m) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots);
    void require_same_ambient(const Subspace& other) const;

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace cofrob
