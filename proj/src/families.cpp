#include "finfree/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>

#include "finfree/error.hpp"

namespace finfree {

namespace {

bool off_diagonal_zero(const Matrix& a, bool check_upper, bool check_lower) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i < j && check_upper && !a(i, j).is_zero()) return false;
            if (i > j && check_lower && !a(i, j).is_zero()) return false;
        }
    return true;
}

bool constant_diagonal(const Matrix& a) {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (!(a(i, i) == a(0, 0))) return false;
    return true;
}

bool principally_balanced(const Matrix& a) {
    const std::size_t n = a.size();
    for (std::size_t k = 1; k < n; ++k) {
        const MinorSlice slice = principal_minors(a, k);
        for (const auto& minor : slice)
            if (!(minor.value == slice.front().value)) return false;
    }
    return true;
}

Matrix random_matrix(std::size_t n, CounterRng& rng, long bound, bool upper, bool lower, bool diag) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool keep = (i < j && upper) || (i > j && lower) || (i == j && diag);
            if (keep) m(i, j) = sample_rational(rng, bound);
        }
    return m;
}

Matrix upper_const_diag(std::size_t n, CounterRng& rng, long bound) {
    Matrix m = random_matrix(n, rng, bound, true, false, false);
    const Scalar c = sample_rational(rng, bound);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

// Upper-triangular constant-diagonal matrix conjugated by a random permutation
// and a random invertible diagonal matrix.
Matrix pb_conjugated_triangular(std::size_t n, CounterRng& rng, long bound) {
    const Matrix c = upper_const_diag(n, rng, bound);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Scalar> d(n);
    for (auto& di : d) di = sample_nonzero_rational(rng, bound);
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t pi = perm[i];
            const std::size_t pj = perm[j];
            m(pi, pj) = c(i, j) * d[pi] / d[pj];
        }
    return m;
}

// Rank one with rows proportional to the first: a_ij = r_1 r_j / r_i.
Matrix pb_rank_one(std::size_t n, CounterRng& rng, long bound) {
    std::vector<Scalar> r(n);
    for (auto& ri : r) ri = sample_nonzero_rational(rng, bound);
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = r[0] * r[j] / r[i];
    return m;
}

Matrix sample_principally_balanced(std::size_t n, CounterRng& rng, long bound) {
    std::uniform_int_distribution<int> pick(0, 2);
    const int construction = pick(rng);
    if (construction == 0) return pb_conjugated_triangular(n, rng, bound);
    if (construction == 1) return pb_rank_one(n, rng, bound);
    std::uniform_int_distribution<int> base(0, 1);
    Matrix m = base(rng) == 0 ? pb_conjugated_triangular(n, rng, bound) : pb_rank_one(n, rng, bound);
    return m + Matrix::scalar(n, sample_rational(rng, bound));
}

bool is_supported(FamilyId first, FamilyId second) {
    return (first == FamilyId::Diagonal && second == FamilyId::PrincipallyBalanced) ||
           (first == FamilyId::UpperTriangular && second == FamilyId::UpperTriangularConstDiag) ||
           (first == FamilyId::LowerTriangular && second == FamilyId::LowerTriangularConstDiag) ||
           (first == FamilyId::Scalar && second == FamilyId::All);
}

// Tries D(lambda, K) for lambda in {10, 100} and every proper non-empty K,
// smallest |K| first; records the first probe that breaks FFP.
BoundaryCheck probe_with_diagonals(std::string description, const Matrix& outside, Kind kind) {
    const std::size_t n = outside.size();
    const Scalar rest = kind == Kind::additive ? Scalar(0) : Scalar(1);
    BoundaryCheck check;
    check.description = std::move(description);
    check.outside = outside;
    for (const long lambda : {10L, 100L}) {
        for (std::size_t k = 1; k < n; ++k) {
            for (const auto& subset : k_subsets(n, k)) {
                Matrix probe = diagonal_probe(n, subset, Scalar(lambda), rest);
                FfpReport report = check_ffp(probe, outside, kind);
                if (!report.verdict) {
                    check.probe = std::move(probe);
                    check.report = std::move(report);
                    check.witnessed = true;
                    return check;
                }
                check.probe = std::move(probe);
                check.report = std::move(report);
            }
        }
    }
    return check;
}

BoundaryCheck probe_with_unit(std::string description, const Matrix& outside, Kind kind, std::size_t k,
                              std::size_t l) {
    EklWitness w = ekl_witness_at(outside, k, l, kind);
    BoundaryCheck check;
    check.description = std::move(description);
    check.outside = outside;
    check.probe = std::move(w.probe);
    check.report = std::move(w.report);
    check.witnessed = !check.report.verdict;
    return check;
}

// First non-zero entry a(l, k) with (l, k) accepted by `where`, scanning column by column.
template <class Pred>
std::pair<std::size_t, std::size_t> find_entry(const Matrix& a, Pred where) {
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t l = 0; l < a.size(); ++l)
            if (where(l, k) && !a(l, k).is_zero()) return {k, l};
    throw Error(ErrorCode::invalid_argument, "no suitable entry for an E_kl witness");
}

Matrix sample_outside(CounterRng& rng, std::size_t n, long bound, FamilyId family) {
    // A random full matrix lies outside every proper family with overwhelming
    // probability; resample on the rare hit.
    while (true) {
        Matrix m = sample_member(FamilyId::All, n, rng, {bound});
        if (!is_member(m, family)) return m;
    }
}

std::vector<BoundaryCheck> boundary_checks(FamilyId first, Kind kind, std::size_t n, CounterRng& rng, long bound) {
    std::vector<BoundaryCheck> checks;
    if (n < 2) return checks;
    switch (first) {
        case FamilyId::Diagonal: {
            checks.push_back(probe_with_diagonals("non-PB matrix against diagonal probes D(lambda,K)",
                                                  sample_outside(rng, n, bound, FamilyId::PrincipallyBalanced),
                                                  kind));
            const Matrix off = sample_outside(rng, n, bound, FamilyId::Diagonal);
            auto [k, l] = find_entry(off, [](std::size_t r, std::size_t c) { return r != c; });
            checks.push_back(probe_with_unit("non-diagonal matrix against E_kl (principally balanced)", off, kind, k, l));
            break;
        }
        case FamilyId::UpperTriangular:
        case FamilyId::LowerTriangular: {
            const bool upper = first == FamilyId::UpperTriangular;
            const Matrix off = sample_outside(rng, n, bound, first);
            auto [k, l] = find_entry(off, [upper](std::size_t r, std::size_t c) { return upper ? r > c : r < c; });
            checks.push_back(probe_with_unit(upper ? "non-upper-triangular matrix against E_kl in ut-const"
                                                   : "non-lower-triangular matrix against E_kl in lt-const",
                                             off, kind, k, l));
            Matrix tri = random_matrix(n, rng, bound, upper, !upper, false);
            for (std::size_t i = 0; i < n; ++i) tri(i, i) = Scalar(static_cast<long>(i + 1));
            checks.push_back(probe_with_diagonals(
                upper ? "upper-triangular matrix with non-constant diagonal against diagonal probes"
                      : "lower-triangular matrix with non-constant diagonal against diagonal probes",
                tri, kind));
            break;
        }
        case FamilyId::Scalar: {
            const Matrix off = sample_outside(rng, n, bound, FamilyId::Diagonal);
            auto [k, l] = find_entry(off, [](std::size_t r, std::size_t c) { return r != c; });
            checks.push_back(probe_with_unit("non-diagonal matrix against E_kl", off, kind, k, l));
            std::vector<Scalar> diag(n);
            for (std::size_t i = 0; i < n; ++i) diag[i] = Scalar(static_cast<long>(i + 1));
            checks.push_back(probe_with_diagonals("non-scalar diagonal matrix against diagonal probes",
                                                  Matrix::diagonal(diag), kind));
            break;
        }
        default:
            break;
    }
    return checks;
}

}  // namespace

std::string_view to_string(FamilyId family) noexcept {
    switch (family) {
        case FamilyId::Diagonal: return "diag";
        case FamilyId::Scalar: return "scalar";
        case FamilyId::UpperTriangular: return "ut";
        case FamilyId::LowerTriangular: return "lt";
        case FamilyId::UpperTriangularConstDiag: return "ut-const";
        case FamilyId::LowerTriangularConstDiag: return "lt-const";
        case FamilyId::PrincipallyBalanced: return "pb";
        case FamilyId::All: return "all";
    }
    return "unknown";
}

FamilyId parse_family(std::string_view text) {
    for (FamilyId f : {FamilyId::Diagonal, FamilyId::Scalar, FamilyId::UpperTriangular, FamilyId::LowerTriangular,
                       FamilyId::UpperTriangularConstDiag, FamilyId::LowerTriangularConstDiag,
                       FamilyId::PrincipallyBalanced, FamilyId::All}) {
        if (text == to_string(f)) return f;
    }
    throw Error(ErrorCode::invalid_argument, "unknown family '" + std::string(text) + "'");
}

bool is_member(const Matrix& a, FamilyId family) {
    switch (family) {
        case FamilyId::Diagonal: return off_diagonal_zero(a, true, true);
        case FamilyId::Scalar: return off_diagonal_zero(a, true, true) && constant_diagonal(a);
        case FamilyId::UpperTriangular: return off_diagonal_zero(a, false, true);
        case FamilyId::LowerTriangular: return off_diagonal_zero(a, true, false);
        case FamilyId::UpperTriangularConstDiag: return off_diagonal_zero(a, false, true) && constant_diagonal(a);
        case FamilyId::LowerTriangularConstDiag: return off_diagonal_zero(a, true, false) && constant_diagonal(a);
        case FamilyId::PrincipallyBalanced: return principally_balanced(a);
        case FamilyId::All: return true;
    }
    return false;
}

CycleSums cycle_sums(const Matrix& a) {
    const std::size_t n = a.size();
    if (n > kMaxCycleSumDimension) {
        throw Error(ErrorCode::size_guard, "cycle sums refuse n > " + std::to_string(kMaxCycleSumDimension));
    }
    CycleSums out;
    out.by_order.resize(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        for (auto& subset : k_subsets(n, k)) {
            // subset[0] is the anchor min I; permute the rest.
            std::vector<std::size_t> tail(subset.begin() + 1, subset.end());
            Scalar total;
            do {
                Scalar product = a(subset[0], tail.empty() ? subset[0] : tail.front());
                for (std::size_t t = 0; t + 1 < tail.size() && !product.is_zero(); ++t) product *= a(tail[t], tail[t + 1]);
                if (!tail.empty()) product *= a(tail.back(), subset[0]);
                total += product;
            } while (std::next_permutation(tail.begin(), tail.end()));
            auto& order = out.by_order[k];
            if (!order.empty() && !(order.front().value == total)) out.balanced = false;
            order.push_back({std::move(subset), std::move(total)});
        }
    }
    return out;
}

Scalar sample_rational(CounterRng& rng, long bound) {
    if (bound < 1) throw Error(ErrorCode::invalid_argument, "entry bound must be >= 1");
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    const long p = num(rng);
    const long q = den(rng);
    return Scalar(p, static_cast<unsigned long>(q));
}

Scalar sample_nonzero_rational(CounterRng& rng, long bound) {
    while (true) {
        Scalar s = sample_rational(rng, bound);
        if (!s.is_zero()) return s;
    }
}

Matrix sample_member(FamilyId family, std::size_t n, CounterRng& rng, const SamplerOptions& options) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "sampler needs n >= 1");
    const long bound = options.entry_bound;
    switch (family) {
        case FamilyId::Diagonal: return random_matrix(n, rng, bound, false, false, true);
        case FamilyId::Scalar: return Matrix::scalar(n, sample_rational(rng, bound));
        case FamilyId::UpperTriangular: return random_matrix(n, rng, bound, true, false, true);
        case FamilyId::LowerTriangular: return random_matrix(n, rng, bound, false, true, true);
        case FamilyId::UpperTriangularConstDiag: return upper_const_diag(n, rng, bound);
        case FamilyId::LowerTriangularConstDiag: return upper_const_diag(n, rng, bound).transpose();
        case FamilyId::PrincipallyBalanced: return sample_principally_balanced(n, rng, bound);
        case FamilyId::All: return random_matrix(n, rng, bound, true, true, true);
    }
    throw Error(ErrorCode::invalid_argument, "unknown family");
}

Matrix sample_member(FamilyId family, std::size_t n, std::uint64_t seed, const SamplerOptions& options) {
    CounterRng rng(seed);
    return sample_member(family, n, rng, options);
}

bool PairCheckReport::ok() const {
    return failures.empty() &&
           std::all_of(boundary_checks.begin(), boundary_checks.end(), [](const auto& c) { return c.witnessed; });
}

PairCheckReport verify_pair(FamilyId first, FamilyId second, Kind kind, std::size_t trials, std::uint64_t seed,
                            std::size_t n, const SamplerOptions& options) {
    if (!is_supported(first, second)) {
        if (is_supported(second, first)) {
            std::swap(first, second);
        } else {
            throw Error(ErrorCode::unsupported_pair, "no complementary-pair theorem for (" +
                                                         std::string(to_string(first)) + ", " +
                                                         std::string(to_string(second)) + ")");
        }
    }
    if (n < 1) throw Error(ErrorCode::invalid_argument, "verify_pair needs n >= 1");

    PairCheckReport report;
    report.first = first;
    report.second = second;
    report.kind = kind;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    for (std::size_t t = 0; t < trials; ++t) {
        CounterRng rng(seed + t);
        Matrix a = sample_member(first, n, rng, options);
        Matrix b = sample_member(second, n, rng, options);
        FfpReport ffp = check_ffp(a, b, kind);
        if (!ffp.verdict) report.failures.push_back({std::move(a), std::move(b), std::move(ffp)});
    }
    CounterRng boundary_rng(seed + trials);
    report.boundary_checks = boundary_checks(first, kind, n, boundary_rng, options.entry_bound);
    return report;
}

Matrix diagonal_probe(std::size_t n, std::span<const std::size_t> subset, const Scalar& lambda, const Scalar& rest) {
    Matrix d = Matrix::scalar(n, rest);
    for (std::size_t i : subset) {
        if (i >= n) throw Error(ErrorCode::out_of_range, "probe index out of range");
        d(i, i) = lambda;
    }
    return d;
}

mpz_class rank_upper_bound(std::size_t n) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "rank bound needs n >= 1");
    mpz_class total = 0;
    for (std::size_t k = 1; k < n; ++k) {
        const mpz_class c = binomial(n, k);
        total += factorial(k) * c * c;
    }
    return total;
}

Polynomial pb_charpoly_from_minors(std::span<const Scalar> minors) {
    if (minors.empty() || !minors[0].is_one()) {
        throw Error(ErrorCode::invalid_argument, "minor profile must start with m_0 = 1");
    }
    const std::size_t n = minors.size() - 1;
    std::vector<Scalar> coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Scalar c = Scalar(mpq_class(binomial(n, i))) * minors[i];
        coeffs[i] = i % 2 == 0 ? c : -c;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace finfree
