#include "finfree/ffp.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "finfree/error.hpp"

namespace finfree {

namespace {

void require_pair(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::dimension_mismatch, "matrices have dimensions " + std::to_string(a.size()) +
                                                       " and " + std::to_string(b.size()));
    }
    if (a.size() == 0) throw Error(ErrorCode::invalid_argument, "matrices must be at least 1x1");
}

void require_2x2(const Matrix& a, const Matrix& b) {
    if (a.size() != 2 || b.size() != 2) throw Error(ErrorCode::dimension_mismatch, "2x2 criterion needs n = 2");
}

FfpReport compare(Kind kind, Polynomial lhs, Polynomial rhs) {
    const std::size_t n = lhs.degree();
    FfpReport report;
    report.kind = kind;
    const std::size_t first = kind == Kind::additive ? 2 : 1;
    const std::size_t last = kind == Kind::additive ? n : n - 1;
    for (std::size_t k = first; k <= last && k <= n; ++k) {
        Scalar diff = lhs[k] - rhs[k];
        if (!diff.is_zero()) report.verdict = false;
        report.residuals.emplace(k, std::move(diff));
    }
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    return report;
}

}  // namespace

std::string_view to_string(Kind kind) noexcept {
    return kind == Kind::additive ? "additive" : "multiplicative";
}

Kind parse_kind(std::string_view text) {
    if (text == "additive") return Kind::additive;
    if (text == "multiplicative") return Kind::multiplicative;
    throw Error(ErrorCode::invalid_argument, "unknown convolution kind '" + std::string(text) + "'");
}

FfpReport is_additive_ffp(const Matrix& a, const Matrix& b) {
    require_pair(a, b);
    return compare(Kind::additive, char_poly(a + b), boxplus(char_poly(a), char_poly(b)));
}

FfpReport is_multiplicative_ffp(const Matrix& a, const Matrix& b) {
    require_pair(a, b);
    return compare(Kind::multiplicative, char_poly(a * b), boxtimes(char_poly(a), char_poly(b)));
}

FfpReport check_ffp(const Matrix& a, const Matrix& b, Kind kind) {
    return kind == Kind::additive ? is_additive_ffp(a, b) : is_multiplicative_ffp(a, b);
}

Scalar additive_condition_2x2(const Matrix& a, const Matrix& b) {
    require_2x2(a, b);
    return (a(0, 0) - a(1, 1)) * (b(1, 1) - b(0, 0)) - Scalar(2) * (a(0, 1) * b(1, 0) + a(1, 0) * b(0, 1));
}

Scalar multiplicative_condition_2x2(const Matrix& a, const Matrix& b) { return additive_condition_2x2(a, b); }

bool expectation_identity_applies(const Matrix& a, const Matrix& b) {
    return a.is_real() && b.is_real() && a.is_symmetric() && b.is_symmetric();
}

Polynomial expected_charpoly_signed_perms(const Matrix& a, const Matrix& b, Kind kind) {
    require_pair(a, b);
    const std::size_t n = a.size();
    if (n > kMaxSignedPermDimension) {
        throw Error(ErrorCode::size_guard, "signed permutation enumeration refuses n > " +
                                               std::to_string(kMaxSignedPermDimension));
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<Scalar> total(n + 1);
    std::size_t count = 0;
    do {
        for (std::uint32_t signs = 0; signs < (1U << n); ++signs) {
            // P has entry s_i at (i, perm[i]); (P^T B P)(perm[i], perm[j]) = s_i s_j B(i, j).
            Matrix conj(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const bool flip = (((signs >> i) ^ (signs >> j)) & 1U) != 0;
                    conj(perm[i], perm[j]) = flip ? -b(i, j) : b(i, j);
                }
            }
            const Polynomial chi = char_poly(kind == Kind::additive ? a + conj : a * conj);
            for (std::size_t k = 0; k <= n; ++k) total[k] += chi[k];
            ++count;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Scalar denom(static_cast<long>(count));
    for (auto& c : total) c /= denom;
    return Polynomial(std::move(total));
}

EklWitness ekl_witness_at(const Matrix& a, std::size_t k, std::size_t l, Kind kind) {
    const std::size_t n = a.size();
    if (k >= n || l >= n || k == l) throw Error(ErrorCode::out_of_range, "witness needs off-diagonal indices");
    if (a(l, k).is_zero()) throw Error(ErrorCode::invalid_argument, "witness entry a_lk must be non-zero");
    EklWitness w;
    w.k = k;
    w.l = l;
    w.probe = Matrix::unit(n, k, l);
    if (kind == Kind::multiplicative) w.probe = w.probe + Matrix::identity(n);
    w.report = check_ffp(a, w.probe, kind);
    return w;
}

std::optional<EklWitness> ekl_witness(const Matrix& a, Kind kind) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            if (l != k && !a(l, k).is_zero()) return ekl_witness_at(a, k, l, kind);
        }
    }
    return std::nullopt;
}

}  // namespace finfree
