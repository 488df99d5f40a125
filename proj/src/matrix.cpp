#include "finfree/matrix.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "finfree/error.hpp"

namespace finfree {

namespace {

void require_same_size(const Matrix& a, const Matrix& b, const char* op) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::dimension_mismatch, std::string(op) + ": dimensions " + std::to_string(a.size()) +
                                                       " and " + std::to_string(b.size()) + " differ");
    }
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) : n_(rows.size()), data_() {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw Error(ErrorCode::dimension_mismatch, "matrix rows must have length n");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix::Matrix(const std::vector<std::vector<Scalar>>& rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw Error(ErrorCode::dimension_mismatch, "matrix rows must have length n");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

Matrix Matrix::diagonal(std::span<const Scalar> values) {
    Matrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Matrix Matrix::scalar(std::size_t n, const Scalar& value) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t row, std::size_t col) {
    if (row >= n || col >= n) throw Error(ErrorCode::out_of_range, "matrix unit index out of range");
    Matrix m(n);
    m(row, col) = Scalar(1);
    return m;
}

Scalar Matrix::trace() const {
    Scalar t;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::principal_submatrix(std::span<const std::size_t> indices) const {
    Matrix sub(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = 0; j < indices.size(); ++j) sub(i, j) = (*this)(indices[i], indices[j]);
    return sub;
}

bool Matrix::is_real() const {
    for (const auto& s : data_)
        if (!s.is_real()) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.size(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require_same_size(a, b, "mat_add");
    Matrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) += b(i, j);
    return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    require_same_size(a, b, "mat_sub");
    Matrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) -= b(i, j);
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_size(a, b, "mat_mul");
    const std::size_t n = a.size();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b(k, j).is_zero()) continue;
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Matrix mat_scale(const Matrix& a, const Scalar& lambda) {
    Matrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) *= lambda;
    return out;
}

Matrix mat_pow(const Matrix& a, unsigned exponent) {
    Matrix result = Matrix::identity(a.size());
    for (unsigned e = 0; e < exponent; ++e) result = mat_mul(result, a);
    return result;
}

Scalar determinant(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix m = a;
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Scalar(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        const Scalar p = m(col, col);
        det *= p;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m(row, col).is_zero()) continue;
            const Scalar factor = m(row, col) / p;
            for (std::size_t j = col; j < n; ++j) m(row, j) -= factor * m(col, j);
        }
    }
    return det;
}

Matrix inverse(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix m = a;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw Error(ErrorCode::singular_matrix, "matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Scalar p = m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m(row, col).is_zero()) continue;
            const Scalar factor = m(row, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(row, j) -= factor * m(col, j);
                inv(row, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

Polynomial char_poly(const Matrix& a) {
    // a_k = -tr(A M_k) / k with M_1 = I, M_{k+1} = A M_k + a_k I.
    const std::size_t n = a.size();
    std::vector<Scalar> coeffs(n + 1);
    coeffs[0] = Scalar(1);
    Matrix m = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix am = mat_mul(a, m);
        coeffs[k] = -am.trace() / Scalar(static_cast<long>(k));
        if (k < n) {
            for (std::size_t i = 0; i < n; ++i) am(i, i) += coeffs[k];
            m = std::move(am);
        }
    }
    return Polynomial(std::move(coeffs));
}

Matrix conjugate(const Matrix& a, const Matrix& p) {
    require_same_size(a, p, "conjugate");
    return mat_mul(mat_mul(p, a), inverse(p));
}

Scalar matrix_moment(const Matrix& a, unsigned k) {
    if (k < 1) throw Error(ErrorCode::out_of_range, "moment order must be >= 1");
    if (a.size() == 0) throw Error(ErrorCode::invalid_argument, "moment of an empty matrix");
    return mat_pow(a, k).trace() / Scalar(static_cast<long>(a.size()));
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> current(k);
    std::iota(current.begin(), current.end(), std::size_t{0});
    while (true) {
        out.push_back(current);
        // Advance to the next combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && current[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++current[i - 1];
        for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
    }
    return out;
}

MinorSlice principal_minors(const Matrix& a, std::size_t k) {
    const std::size_t n = a.size();
    if (k > n) {
        throw Error(ErrorCode::out_of_range, "minor order " + std::to_string(k) + " exceeds dimension " +
                                                 std::to_string(n));
    }
    if (n > kMaxMinorDimension) {
        throw Error(ErrorCode::size_guard, "principal minor enumeration refuses n > " +
                                               std::to_string(kMaxMinorDimension));
    }
    MinorSlice slice;
    for (auto& subset : k_subsets(n, k)) {
        Scalar value = k == 0 ? Scalar(1) : determinant(a.principal_submatrix(subset));
        slice.push_back({std::move(subset), std::move(value)});
    }
    return slice;
}

MinorTable minor_table(const Matrix& a) {
    MinorTable table;
    for (std::size_t k = 0; k <= a.size(); ++k) table.push_back(principal_minors(a, k));
    return table;
}

}  // namespace finfree
