#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>

#include "finfree/matrix.hpp"
#include "finfree/polynomial.hpp"

namespace finfree {

enum class Kind { additive, multiplicative };

std::string_view to_string(Kind kind) noexcept;
Kind parse_kind(std::string_view text);

/// Outcome of comparing chi_{A+B} (or chi_{AB}) with the corresponding
/// convolution of chi_A and chi_B.
///
/// residuals[k] = lhs[k] - rhs[k] for every coefficient index that can
/// differ: k = 2..n for additive, k = 1..n-1 for multiplicative. Indices that
/// agree for every pair (x^n, x^(n-1) resp. x^n and the constant) are never
/// listed.
struct FfpReport {
    Kind kind = Kind::additive;
    bool verdict = true;
    std::map<std::size_t, Scalar> residuals;
    Polynomial lhs;
    Polynomial rhs;
};

FfpReport is_additive_ffp(const Matrix& a, const Matrix& b);
FfpReport is_multiplicative_ffp(const Matrix& a, const Matrix& b);
FfpReport check_ffp(const Matrix& a, const Matrix& b, Kind kind);

/// (a11 - a22)(b22 - b11) - 2(a12 b21 + a21 b12); zero iff the 2x2 pair is in
/// additive FFP.
Scalar additive_condition_2x2(const Matrix& a, const Matrix& b);

/// The multiplicative 2x2 criterion; it is the same expression as the additive one.
Scalar multiplicative_condition_2x2(const Matrix& a, const Matrix& b);

inline constexpr std::size_t kMaxSignedPermDimension = 6;

/// Exact average of chi_{A + P^T B P} (or chi_{A P^T B P}) over all 2^n n!
/// signed permutation matrices P. Equals the convolution when A and B are
/// real symmetric; for other inputs the average is still returned.
Polynomial expected_charpoly_signed_perms(const Matrix& a, const Matrix& b, Kind kind);

/// True when the signed-permutation average is guaranteed to equal the
/// convolution (both matrices real symmetric).
bool expectation_identity_applies(const Matrix& a, const Matrix& b);

struct EklWitness {
    std::size_t k = 0;  ///< 0-based
    std::size_t l = 0;  ///< 0-based
    Matrix probe;       ///< E_kl (additive) or I + E_kl (multiplicative)
    FfpReport report;
};

/// For an off-diagonal entry a_lk != 0, the pair (A, E_kl) is not in additive
/// FFP although chi_A ⊞ chi_{E_kl} = chi_A; the residual at x^(n-2) is -a_lk.
/// The multiplicative variant uses I + E_kl and fails at x^(n-1).
/// Entries are scanned column by column; returns nullopt for diagonal A.
std::optional<EklWitness> ekl_witness(const Matrix& a, Kind kind = Kind::additive);

/// Witness built on a specific off-diagonal entry a(l, k) (0-based).
EklWitness ekl_witness_at(const Matrix& a, std::size_t k, std::size_t l, Kind kind);

}  // namespace finfree
