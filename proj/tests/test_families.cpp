#include <doctest.h>

#include <algorithm>

#include "finfree/error.hpp"
#include "finfree/families.hpp"
#include "finfree/json_io.hpp"
#include "oracles.hpp"

using namespace finfree;
using oracle::poly;

namespace {

const Matrix kBalanced{{1, 2, 3}, {6, 1, -12}, {4, -1, 1}};

Matrix ratio_matrix(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(static_cast<long>(i + 1), j + 1);
    return m;
}

bool upper(const Matrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

bool constant_diagonal(const Matrix& a) {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (!(a(i, i) == a(0, 0))) return false;
    return true;
}

Matrix random_permutation(CounterRng& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix p(n);
    for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = Scalar(1);
    return p;
}

const FamilyId kAllFamilies[] = {FamilyId::Diagonal,
                                 FamilyId::Scalar,
                                 FamilyId::UpperTriangular,
                                 FamilyId::LowerTriangular,
                                 FamilyId::UpperTriangularConstDiag,
                                 FamilyId::LowerTriangularConstDiag,
                                 FamilyId::PrincipallyBalanced,
                                 FamilyId::All};

}  // namespace

TEST_CASE("membership examples") {
    CHECK(is_member(kBalanced, FamilyId::PrincipallyBalanced));
    CHECK_FALSE(is_member(Matrix::diagonal({1, 2}), FamilyId::PrincipallyBalanced));
    CHECK(is_member(ratio_matrix(4), FamilyId::PrincipallyBalanced));
    CHECK(is_member(Matrix::diagonal({1, 2}), FamilyId::Diagonal));
    CHECK_FALSE(is_member(Matrix::diagonal({1, 2}), FamilyId::Scalar));
    CHECK(is_member(Matrix{{2, 5}, {0, 2}}, FamilyId::UpperTriangularConstDiag));
    CHECK_FALSE(is_member(Matrix{{2, 5}, {0, 3}}, FamilyId::UpperTriangularConstDiag));
    CHECK(is_member(Matrix{{2, 5}, {0, 3}}, FamilyId::UpperTriangular));
    CHECK_FALSE(is_member(Matrix{{2, 5}, {0, 3}}, FamilyId::LowerTriangular));
    CHECK(is_member(Matrix{{2, 0}, {7, 2}}, FamilyId::LowerTriangularConstDiag));
    CHECK(is_member(kBalanced, FamilyId::All));
}

TEST_CASE("family names") {
    for (FamilyId f : kAllFamilies) CHECK(parse_family(to_string(f)) == f);
    CHECK(to_string(FamilyId::PrincipallyBalanced) == "pb");
    CHECK(to_string(FamilyId::UpperTriangularConstDiag) == "ut-const");
    CHECK_THROWS_AS((void)parse_family("toeplitz"), Error);
}

TEST_CASE("samplers produce members and respect containments") {
    CounterRng rng(61);
    for (FamilyId f : kAllFamilies) {
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int t = 0; t < 8; ++t) {
                const Matrix m = sample_member(f, n, rng);
                CAPTURE(to_string(f));
                CAPTURE(m);
                CHECK(m.size() == n);
                CHECK(is_member(m, f));
                if (f == FamilyId::Scalar) {
                    CHECK(m == Matrix::scalar(n, m(0, 0)));
                    CHECK(is_member(m, FamilyId::Diagonal));
                    CHECK(is_member(m, FamilyId::PrincipallyBalanced));
                }
                if (f == FamilyId::Diagonal) {
                    CHECK(is_member(m, FamilyId::UpperTriangular));
                    CHECK(is_member(m, FamilyId::LowerTriangular));
                }
                if (f == FamilyId::UpperTriangularConstDiag || f == FamilyId::LowerTriangularConstDiag)
                    CHECK(is_member(m, FamilyId::PrincipallyBalanced));
                if (f == FamilyId::UpperTriangular)
                    CHECK(is_member(m, FamilyId::PrincipallyBalanced) == constant_diagonal(m));
            }
        }
    }
}

TEST_CASE("samplers are deterministic in the seed") {
    for (FamilyId f : kAllFamilies) {
        CHECK(sample_member(f, 4, 1234) == sample_member(f, 4, 1234));
    }
    CHECK_FALSE(sample_member(FamilyId::All, 4, 1) == sample_member(FamilyId::All, 4, 2));
}

TEST_CASE("sampled entries respect the bound") {
    CounterRng rng(62);
    for (int t = 0; t < 20; ++t) {
        const Matrix m = sample_member(FamilyId::All, 4, rng, SamplerOptions{3});
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(abs(m(i, j).re().get_num()) <= 3);
                CHECK(m(i, j).re().get_den() <= 3);
            }
    }
    CHECK_THROWS_AS((void)sample_member(FamilyId::All, 0, 1), Error);
}

TEST_CASE("principally balanced family is closed under permutation and diagonal conjugation") {
    CounterRng rng(63);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 4);
        const Matrix b = sample_member(FamilyId::PrincipallyBalanced, n, rng);
        CHECK(is_member(conjugate(b, random_permutation(rng, n)), FamilyId::PrincipallyBalanced));
        std::vector<Scalar> diag(n);
        for (auto& d : diag) d = sample_nonzero_rational(rng, 10);
        CHECK(is_member(conjugate(b, Matrix::diagonal(diag)), FamilyId::PrincipallyBalanced));
    }
}

TEST_CASE("cycle sums of the balanced example") {
    const CycleSums sums = cycle_sums(kBalanced);
    REQUIRE(sums.by_order.size() == 4);
    CHECK(sums.by_order[0].empty());
    REQUIRE(sums.by_order[1].size() == 3);
    for (const auto& c : sums.by_order[1]) CHECK(c.value == Scalar(1));
    REQUIRE(sums.by_order[2].size() == 3);
    for (const auto& c : sums.by_order[2]) CHECK(c.value == Scalar(12));
    REQUIRE(sums.by_order[3].size() == 1);
    // a12 a23 a31 + a13 a32 a21 = 2*(-12)*4 + 3*(-1)*6
    CHECK(sums.by_order[3][0].value == Scalar(-114));
    CHECK(sums.by_order[3][0].indices == std::vector<std::size_t>{0, 1, 2});
    CHECK(sums.balanced);
    const Scalar m1 = sums.by_order[1][0].value;
    CHECK(m1 * m1 - sums.by_order[2][0].value == Scalar(-11));
}

TEST_CASE("cycle sums of diagonal matrices and matrix units") {
    const CycleSums d = cycle_sums(Matrix::diagonal({1, 2, 3, 4}));
    for (std::size_t k = 2; k <= 4; ++k)
        for (const auto& c : d.by_order[k]) CHECK(c.value.is_zero());
    CHECK_FALSE(d.balanced);
    const CycleSums e = cycle_sums(Matrix::unit(4, 1, 3));
    for (std::size_t k = 1; k <= 4; ++k)
        for (const auto& c : e.by_order[k]) CHECK(c.value.is_zero());
    CHECK(e.balanced);
    CHECK_THROWS_AS((void)cycle_sums(Matrix::identity(kMaxCycleSumDimension + 1)), Error);
}

TEST_CASE("cycle sums relate to the characteristic polynomial") {
    // Summing sign-weighted cycle covers over all subsets reproduces the minors:
    // det(A_S) = sum over set partitions of S into cycles of prod (-1)^(|C|-1) c_C.
    CounterRng rng(64);
    for (int t = 0; t < 5; ++t) {
        const Matrix a = oracle::random_matrix(rng, 3);
        const CycleSums s = cycle_sums(a);
        const Scalar c0 = s.by_order[1][0].value, c1 = s.by_order[1][1].value, c2 = s.by_order[1][2].value;
        const Scalar c01 = s.by_order[2][0].value, c02 = s.by_order[2][1].value, c12 = s.by_order[2][2].value;
        const Scalar c012 = s.by_order[3][0].value;
        CHECK(determinant(a) == c0 * c1 * c2 - c01 * c2 - c02 * c1 - c12 * c0 + c012);
    }
}

TEST_CASE("balanced cycle sums agree with principal balance") {
    CounterRng rng(65);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 5);
        Matrix m;
        switch (t % 4) {
            case 0: m = sample_member(FamilyId::PrincipallyBalanced, n, rng); break;
            case 1: m = oracle::random_matrix(rng, n); break;
            case 2: m = sample_member(FamilyId::UpperTriangular, n, rng); break;
            default: m = sample_member(FamilyId::Diagonal, n, rng); break;
        }
        CAPTURE(m);
        CHECK(cycle_sums(m).balanced == is_member(m, FamilyId::PrincipallyBalanced));
    }
}

TEST_CASE("complementary pairs hold on samples") {
    const std::pair<FamilyId, FamilyId> pairs[] = {
        {FamilyId::Diagonal, FamilyId::PrincipallyBalanced},
        {FamilyId::UpperTriangular, FamilyId::UpperTriangularConstDiag},
        {FamilyId::LowerTriangular, FamilyId::LowerTriangularConstDiag},
        {FamilyId::Scalar, FamilyId::All},
    };
    for (const auto& [f, g] : pairs) {
        for (Kind kind : {Kind::additive, Kind::multiplicative}) {
            for (std::size_t n = 1; n <= 5; ++n) {
                const PairCheckReport r = verify_pair(f, g, kind, 25, 100 * n, n);
                CAPTURE(to_string(f));
                CAPTURE(to_string(kind));
                CAPTURE(n);
                CHECK(r.failures.empty());
                CHECK(r.trials == 25);
                CHECK(r.ok());
                if (n >= 2) {
                    CHECK(r.boundary_checks.size() == 2);
                    for (const auto& b : r.boundary_checks) {
                        CHECK(b.witnessed);
                        CHECK_FALSE(b.report.verdict);
                    }
                } else {
                    CHECK(r.boundary_checks.empty());
                }
            }
        }
    }
}

TEST_CASE("pair order does not matter and only proven pairs are accepted") {
    const PairCheckReport swapped = verify_pair(FamilyId::PrincipallyBalanced, FamilyId::Diagonal, Kind::additive, 5, 3, 3);
    CHECK(swapped.ok());
    try {
        (void)verify_pair(FamilyId::Diagonal, FamilyId::UpperTriangular, Kind::additive, 5, 3, 3);
        FAIL("unsupported pair accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::unsupported_pair);
    }
    CHECK_THROWS_AS((void)verify_pair(FamilyId::All, FamilyId::All, Kind::multiplicative, 5, 3, 3), Error);
}

TEST_CASE("verify_pair is reproducible") {
    const PairCheckReport a = verify_pair(FamilyId::Diagonal, FamilyId::PrincipallyBalanced, Kind::additive, 10, 7, 4);
    const PairCheckReport b = verify_pair(FamilyId::Diagonal, FamilyId::PrincipallyBalanced, Kind::additive, 10, 7, 4);
    CHECK(json::to_json(a).dump() == json::to_json(b).dump());
}

TEST_CASE("boundary probes for the diagonal family") {
    // A non-diagonal matrix escapes the complement of PB through an E_kl witness.
    const Matrix a{{1, 1}, {0, 2}};
    CHECK_FALSE(is_member(a, FamilyId::Diagonal));
    CHECK(is_member(Matrix::unit(2, 1, 0), FamilyId::PrincipallyBalanced));
    const auto w = ekl_witness(a);
    REQUIRE(w.has_value());
    CHECK(w->k == 1);
    CHECK(w->l == 0);
    CHECK_FALSE(w->report.verdict);

    // diag(1,2) is not PB and fails against a diagonal probe.
    const std::size_t first[] = {0};
    const Matrix probe = diagonal_probe(2, first, Scalar(10), Scalar(0));
    CHECK(probe == Matrix::diagonal({10, 0}));
    CHECK_FALSE(is_additive_ffp(Matrix{{1, 1}, {1, 2}}, probe).verdict);
    const Matrix mprobe = diagonal_probe(3, first, Scalar(100), Scalar(1));
    CHECK(mprobe == Matrix::diagonal({100, 1, 1}));
}

TEST_CASE("simultaneously triangularized single-eigenvalue pairs") {
    CounterRng rng(66);
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
        const Matrix p = oracle::random_invertible(rng, n, 4);
        const Matrix a = conjugate(sample_member(FamilyId::UpperTriangularConstDiag, n, rng), p);
        const Matrix b = conjugate(sample_member(FamilyId::UpperTriangular, n, rng), p);
        const Matrix pa = oracle::apply_poly(oracle::random_ascending_poly(rng, 2), a);
        const Matrix qb = oracle::apply_poly(oracle::random_ascending_poly(rng, 2), b);
        CHECK(is_additive_ffp(pa, qb).verdict);
    }
}

TEST_CASE("rank upper bound") {
    CHECK(rank_upper_bound(1) == 0);
    CHECK(rank_upper_bound(2) == 4);
    CHECK(rank_upper_bound(3) == 27);
    CHECK(rank_upper_bound(4) == 184);
}

TEST_CASE("characteristic polynomial from a balanced minor profile") {
    const Scalar det = oracle::leibniz_det(kBalanced);
    const std::vector<Scalar> minors{Scalar(1), Scalar(1), Scalar(-11), det};
    CHECK(pb_charpoly_from_minors(minors) == char_poly(kBalanced));
    CHECK(pb_charpoly_from_minors(std::vector<Scalar>{1, 0, 0, 0, 0}) == Polynomial::monomial(4));
    const Scalar c(-2, 3);
    CHECK(pb_charpoly_from_minors(std::vector<Scalar>{1, c, c.pow(2), c.pow(3)}) == Polynomial::power_of_linear(c, 3));
    CHECK_THROWS_AS((void)pb_charpoly_from_minors(std::vector<Scalar>{2, 1}), Error);

    CounterRng rng(67);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 5);
        const Matrix b = sample_member(FamilyId::PrincipallyBalanced, n, rng);
        const MinorTable table = minor_table(b);
        std::vector<Scalar> profile;
        for (const auto& slice : table) profile.push_back(slice.front().value);
        CHECK(pb_charpoly_from_minors(profile) == char_poly(b));
    }
}

TEST_CASE("pair report json") {
    const PairCheckReport r = verify_pair(FamilyId::Scalar, FamilyId::All, Kind::multiplicative, 3, 5, 2);
    const json::Json j = json::to_json(r);
    CHECK(j["families"][0] == "scalar");
    CHECK(j["families"][1] == "all");
    CHECK(j["kind"] == "multiplicative");
    CHECK(j["trials"] == 3);
    CHECK(j["ok"] == true);
    CHECK(j["failures"].empty());
    CHECK(j["boundary_checks"].size() == 2);
}
