#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "finfree/polynomial.hpp"
#include "finfree/scalar.hpp"

namespace finfree {

/// Dense square matrix of exact scalars, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
    explicit Matrix(const std::vector<std::vector<Scalar>>& rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t n) { return Matrix(n); }
    static Matrix diagonal(std::span<const Scalar> values);
    static Matrix diagonal(std::initializer_list<Scalar> values) {
        return diagonal(std::span<const Scalar>(values.begin(), values.size()));
    }
    static Matrix scalar(std::size_t n, const Scalar& value);
    /// Matrix unit E_kl: 1 at (row, col), zero elsewhere.
    static Matrix unit(std::size_t n, std::size_t row, std::size_t col);

    std::size_t size() const noexcept { return n_; }

    Scalar& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
    const Scalar& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

    Scalar trace() const;
    Matrix transpose() const;
    /// Principal submatrix on the given (sorted) index set.
    Matrix principal_submatrix(std::span<const std::size_t> indices) const;

    bool is_real() const;
    bool is_symmetric() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

private:
    std::size_t n_ = 0;
    std::vector<Scalar> data_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, const Scalar& lambda);
Matrix mat_pow(const Matrix& a, unsigned exponent);

inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return mat_sub(a, b); }
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator*(const Scalar& lambda, const Matrix& a) { return mat_scale(a, lambda); }

Scalar determinant(const Matrix& a);
/// Exact Gauss-Jordan inverse; throws Error(singular_matrix) if det(a) == 0.
Matrix inverse(const Matrix& a);

/// det(xI - A) by the Faddeev-LeVerrier recurrence.
Polynomial char_poly(const Matrix& a);

/// P * A * P^{-1}.
Matrix conjugate(const Matrix& a, const Matrix& p);

/// Normalized trace (1/n) tr(A^k), k >= 1.
Scalar matrix_moment(const Matrix& a, unsigned k);

struct PrincipalMinor {
    std::vector<std::size_t> indices;
    Scalar value;

    friend bool operator==(const PrincipalMinor&, const PrincipalMinor&) = default;
};

/// One order of a minor table: all C(n,k) principal minors, index sets in
/// lexicographic order.
using MinorSlice = std::vector<PrincipalMinor>;

/// Orders 0..n; order 0 holds the single empty minor 1.
using MinorTable = std::vector<MinorSlice>;

inline constexpr std::size_t kMaxMinorDimension = 16;

MinorSlice principal_minors(const Matrix& a, std::size_t k);
MinorTable minor_table(const Matrix& a);

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

}  // namespace finfree
