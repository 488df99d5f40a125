#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finfree/ffp.hpp"
#include "finfree/matrix.hpp"
#include "finfree/random.hpp"

namespace finfree {

enum class FamilyId {
    Diagonal,
    Scalar,
    UpperTriangular,
    LowerTriangular,
    UpperTriangularConstDiag,
    LowerTriangularConstDiag,
    PrincipallyBalanced,
    All,
};

/// Short names used on the command line: diag, scalar, ut, lt, ut-const,
/// lt-const, pb, all.
std::string_view to_string(FamilyId family) noexcept;
FamilyId parse_family(std::string_view text);

/// Structural membership test. PrincipallyBalanced compares all principal
/// minors of each order k = 1..n.
bool is_member(const Matrix& a, FamilyId family);

struct CycleSum {
    std::vector<std::size_t> indices;
    Scalar value;
};

struct CycleSums {
    /// by_order[k] lists c_I for all |I| = k in lexicographic order;
    /// by_order[0] is empty.
    std::vector<std::vector<CycleSum>> by_order;
    /// c_I depends only on |I|.
    bool balanced = true;
};

inline constexpr std::size_t kMaxCycleSumDimension = 12;

/// c_I = sum over cyclic orders (i1 = min I, i2, ..., ik) of a_{i1 i2} ... a_{ik i1}.
CycleSums cycle_sums(const Matrix& a);

struct SamplerOptions {
    long entry_bound = 10;
};

/// Entries are rationals p/q with p in [-bound, bound], q in [1, bound].
Matrix sample_member(FamilyId family, std::size_t n, CounterRng& rng, const SamplerOptions& options = {});
Matrix sample_member(FamilyId family, std::size_t n, std::uint64_t seed, const SamplerOptions& options = {});

Scalar sample_rational(CounterRng& rng, long bound);
Scalar sample_nonzero_rational(CounterRng& rng, long bound);

struct PairFailure {
    Matrix a;
    Matrix b;
    FfpReport report;
};

/// A matrix outside one family together with a member of the other family
/// it fails to be in FFP with.
struct BoundaryCheck {
    std::string description;
    Matrix outside;
    Matrix probe;
    FfpReport report;
    bool witnessed = false;
};

struct PairCheckReport {
    FamilyId first = FamilyId::Diagonal;
    FamilyId second = FamilyId::PrincipallyBalanced;
    Kind kind = Kind::additive;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<PairFailure> failures;
    std::vector<BoundaryCheck> boundary_checks;

    bool ok() const;
};

/// Samples `trials` pairs (trial t is seeded with seed + t) from the two
/// families and checks FFP for each, then runs finite maximality probes.
/// Accepted pairs (either order): (diag, pb), (ut, ut-const),
/// (lt, lt-const), (scalar, all).
PairCheckReport verify_pair(FamilyId first, FamilyId second, Kind kind, std::size_t trials, std::uint64_t seed,
                            std::size_t n, const SamplerOptions& options = {});

/// D(lambda, K): lambda on K and `rest` elsewhere on the diagonal.
Matrix diagonal_probe(std::size_t n, std::span<const std::size_t> subset, const Scalar& lambda, const Scalar& rest);

/// sum_{k=1}^{n-1} k! C(n,k)^2
mpz_class rank_upper_bound(std::size_t n);

/// sum_i (-1)^i C(n,i) m_i x^(n-i) from the common minors m_0 = 1, m_1, ..., m_n.
Polynomial pb_charpoly_from_minors(std::span<const Scalar> minors);

}  // namespace finfree
