#pragma once

#include <cstddef>
#include <vector>

#include "finfree/matrix.hpp"
#include "finfree/partitions.hpp"
#include "finfree/polynomial.hpp"

namespace finfree {

/// Normalized power sums m_1, m_2, ... of an n x n matrix (values[0] = m_1).
/// Usually n values; longer sequences are allowed since every m_r with
/// r > n is determined by the first n.
struct MomentVector {
    std::size_t n = 0;
    std::vector<Scalar> values;

    const Scalar& operator[](std::size_t r) const;  ///< 1-based: m_r
    friend bool operator==(const MomentVector&, const MomentVector&) = default;
};

/// Finite free cumulants kappa_1..kappa_n (values[0] = kappa_1).
struct CumulantVector {
    std::size_t n = 0;
    std::vector<Scalar> values;

    const Scalar& operator[](std::size_t r) const;  ///< 1-based: kappa_r
    friend bool operator==(const CumulantVector&, const CumulantVector&) = default;
};

/// Lewin's coefficient-moment formula: a_k = sum over partitions of k of
/// prod_i (-n m_{r_i})^{s_i} / (r_i^{s_i} s_i!). Uses m_1..m_n.
Polynomial coeffs_from_moments(const MomentVector& m);

/// Newton's identities, m_r = -(r/n) c_r - sum_{i<r} c_i m_{r-i}. Returns
/// `count` moments (default: the degree).
MomentVector moments_from_coeffs(const Polynomial& p, std::size_t count = 0);

/// Direct traces: m_1..m_count of A.
MomentVector matrix_moments(const Matrix& a, std::size_t count = 0);

/// Moments of chi_A ⊞ chi_B from the moments of A and B.
MomentVector ffp_sum_moments(const MomentVector& ma, const MomentVector& mb, std::size_t count = 0);

/// The explicit sum formulas for m_1..m_4 of an additive FFP pair. k = 4
/// needs n >= 2.
Scalar closed_form_sum_moment(unsigned k, const MomentVector& ma, const MomentVector& mb);

inline constexpr std::size_t kMaxCumulantOrder = 12;

/// m_j = (-1)^(j-1) / (n^(j+1) (j-1)!) sum_pi n^|pi| mu(0,pi) kappa_pi
///         sum_{rho : rho v pi = 1} n^|rho| mu(0,rho).
Scalar moments_from_cumulants(const CumulantVector& kappa, std::size_t j);

/// Unique solution of the triangular system above for kappa_1..kappa_n.
CumulantVector cumulants_from_moments(const MomentVector& m);

/// chi_A == (x - m_1(A))^n.
bool has_single_eigenvalue(const Matrix& a);

/// m_1(AB) and m_2(AB) of a multiplicative FFP pair from the factor moments.
Scalar mult_ffp_moment(unsigned k, const MomentVector& ma, const MomentVector& mb);

}  // namespace finfree
