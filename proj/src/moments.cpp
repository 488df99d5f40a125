#include "finfree/moments.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "finfree/error.hpp"

namespace finfree {

namespace {

Scalar integer(long long v) { return Scalar(mpq_class(mpz_class(std::to_string(v)))); }
Scalar integer(const mpz_class& v) { return Scalar(mpq_class(v)); }
Scalar from_size(std::size_t v) { return Scalar(static_cast<long>(v)); }

void require_moments(const MomentVector& m, std::size_t needed, const char* what) {
    if (m.n < 1) throw Error(ErrorCode::invalid_argument, std::string(what) + ": dimension must be >= 1");
    if (m.values.size() < needed) {
        throw Error(ErrorCode::out_of_range, std::string(what) + ": needs " + std::to_string(needed) +
                                                 " moments, got " + std::to_string(m.values.size()));
    }
}

void require_same_dimension(const MomentVector& a, const MomentVector& b) {
    if (a.n != b.n) {
        throw Error(ErrorCode::dimension_mismatch,
                    "moment vectors for n = " + std::to_string(a.n) + " and n = " + std::to_string(b.n));
    }
}

// One term of the moment-cumulant formula per block-size type of pi: every
// quantity in the double sum is invariant under relabelling [j].
struct TypeTerm {
    std::vector<unsigned> block_sizes;
    long long multiplicity = 0;           // number of pi with this type
    std::size_t blocks = 0;               // |pi|
    long long mobius = 0;                 // mu(0_j, pi)
    std::vector<long long> rho_weights;   // [r] = sum of mu(0_j, rho) over rho v pi = 1_j, |rho| = r
};

using Mask = std::uint32_t;

// Visits every partition of [j] as a list of block bitmasks.
template <class Fn>
void for_each_partition_masks(std::size_t j, Fn&& fn) {
    std::vector<std::size_t> rgs(j, 0);
    std::vector<std::size_t> prefix_max(j, 0);
    std::vector<Mask> masks;
    while (true) {
        masks.assign(prefix_max[j - 1] + 1, 0);
        for (std::size_t i = 0; i < j; ++i) masks[rgs[i]] |= Mask{1} << i;
        fn(masks);
        std::size_t i = j - 1;
        while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) return;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t t = i + 1; t < j; ++t) {
            rgs[t] = 0;
            prefix_max[t] = prefix_max[i];
        }
    }
}

long long mobius_of_masks(const std::vector<Mask>& masks, std::size_t j) {
    long long value = (j - masks.size()) % 2 == 0 ? 1 : -1;
    for (Mask m : masks) {
        const auto size = static_cast<long long>(__builtin_popcount(m));
        for (long long f = 2; f < size; ++f) value *= f;
    }
    return value;
}

bool joins_to_top(const std::vector<Mask>& a, const std::vector<Mask>& b, Mask full) {
    Mask reach = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto* part : {&a, &b})
            for (Mask m : *part)
                if ((m & reach) != 0 && (m & ~reach) != 0) {
                    reach |= m;
                    changed = true;
                }
    }
    return reach == full;
}

std::shared_ptr<const std::vector<TypeTerm>> build_terms(std::size_t j) {
    const Mask full = (Mask{1} << j) - 1;
    std::map<std::vector<unsigned>, std::pair<TypeTerm, std::vector<Mask>>> by_type;
    for_each_partition_masks(j, [&](const std::vector<Mask>& masks) {
        std::vector<unsigned> sizes;
        for (Mask m : masks) sizes.push_back(static_cast<unsigned>(__builtin_popcount(m)));
        std::sort(sizes.rbegin(), sizes.rend());
        auto [it, inserted] = by_type.try_emplace(sizes);
        auto& [term, representative] = it->second;
        if (inserted) {
            term.block_sizes = sizes;
            term.blocks = masks.size();
            term.mobius = mobius_of_masks(masks, j);
            term.rho_weights.assign(j + 1, 0);
            representative = masks;
        }
        ++term.multiplicity;
    });
    auto terms = std::make_shared<std::vector<TypeTerm>>();
    for (auto& [sizes, entry] : by_type) {
        auto& [term, representative] = entry;
        for_each_partition_masks(j, [&](const std::vector<Mask>& rho) {
            if (joins_to_top(representative, rho, full)) term.rho_weights[rho.size()] += mobius_of_masks(rho, j);
        });
        terms->push_back(std::move(term));
    }
    return terms;
}

std::shared_ptr<const std::vector<TypeTerm>> moment_terms(std::size_t j) {
    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const std::vector<TypeTerm>>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(j); it != cache.end()) return it->second;
    }
    auto built = build_terms(j);
    std::lock_guard lock(mutex);
    return cache.try_emplace(j, std::move(built)).first->second;
}

}  // namespace

const Scalar& MomentVector::operator[](std::size_t r) const {
    if (r < 1 || r > values.size()) throw Error(ErrorCode::out_of_range, "moment index " + std::to_string(r));
    return values[r - 1];
}

const Scalar& CumulantVector::operator[](std::size_t r) const {
    if (r < 1 || r > values.size()) throw Error(ErrorCode::out_of_range, "cumulant index " + std::to_string(r));
    return values[r - 1];
}

Polynomial coeffs_from_moments(const MomentVector& m) {
    require_moments(m, m.n, "coeffs_from_moments");
    const std::size_t n = m.n;
    const Scalar neg_n = -from_size(n);
    std::vector<Scalar> coeffs(n + 1);
    coeffs[0] = Scalar(1);
    for (unsigned k = 1; k <= n; ++k) {
        Scalar total;
        for (const auto& partition : int_partitions(k)) {
            Scalar term(1);
            for (auto [r, s] : partition.parts) {
                const Scalar base = neg_n * m[r];
                const mpz_class denom = [&] {
                    mpz_class rp;
                    mpz_ui_pow_ui(rp.get_mpz_t(), r, s);
                    return mpz_class(rp * factorial(s));
                }();
                term *= base.pow(s) / integer(denom);
            }
            total += term;
        }
        coeffs[k] = std::move(total);
    }
    return Polynomial(std::move(coeffs));
}

MomentVector moments_from_coeffs(const Polynomial& p, std::size_t count) {
    if (!p.is_monic()) throw Error(ErrorCode::not_monic, "moments_from_coeffs needs a monic polynomial");
    const std::size_t n = p.degree();
    if (n < 1) throw Error(ErrorCode::invalid_argument, "moments_from_coeffs needs degree >= 1");
    if (count == 0) count = n;
    MomentVector out{n, std::vector<Scalar>(count)};
    const Scalar n_s = from_size(n);
    for (std::size_t r = 1; r <= count; ++r) {
        Scalar value;
        if (r <= n) value = -(from_size(r) / n_s) * p[r];
        for (std::size_t i = 1; i < r && i <= n; ++i) value -= p[i] * out.values[r - i - 1];
        out.values[r - 1] = std::move(value);
    }
    return out;
}

MomentVector matrix_moments(const Matrix& a, std::size_t count) {
    const std::size_t n = a.size();
    if (n < 1) throw Error(ErrorCode::invalid_argument, "matrix_moments needs n >= 1");
    if (count == 0) count = n;
    MomentVector out{n, {}};
    Matrix power = a;
    const Scalar n_s = from_size(n);
    for (std::size_t r = 1; r <= count; ++r) {
        if (r > 1) power = power * a;
        out.values.push_back(power.trace() / n_s);
    }
    return out;
}

MomentVector ffp_sum_moments(const MomentVector& ma, const MomentVector& mb, std::size_t count) {
    require_same_dimension(ma, mb);
    return moments_from_coeffs(boxplus(coeffs_from_moments(ma), coeffs_from_moments(mb)), count);
}

Scalar closed_form_sum_moment(unsigned k, const MomentVector& ma, const MomentVector& mb) {
    require_same_dimension(ma, mb);
    if (k < 1 || k > 4) throw Error(ErrorCode::out_of_range, "closed forms exist for k = 1..4 only");
    require_moments(ma, k, "closed_form_sum_moment");
    require_moments(mb, k, "closed_form_sum_moment");
    switch (k) {
        case 1: return ma[1] + mb[1];
        case 2: return ma[2] + Scalar(2) * ma[1] * mb[1] + mb[2];
        case 3: return ma[3] + Scalar(3) * ma[2] * mb[1] + Scalar(3) * ma[1] * mb[2] + mb[3];
        default: break;
    }
    if (ma.n < 2) throw Error(ErrorCode::out_of_range, "the fourth-moment formula needs n >= 2");
    const Scalar n = from_size(ma.n);
    const Scalar w = Scalar(2) * n / (n - Scalar(1));
    const Scalar v = (Scalar(4) * n - Scalar(6)) / (n - Scalar(1));
    const Scalar a1sq = ma[1] * ma[1];
    const Scalar b1sq = mb[1] * mb[1];
    return ma[4] + Scalar(4) * ma[3] * mb[1] + w * ma[2] * b1sq + v * ma[2] * mb[2] - w * a1sq * b1sq +
           w * a1sq * mb[2] + Scalar(4) * ma[1] * mb[3] + mb[4];
}

Scalar moments_from_cumulants(const CumulantVector& kappa, std::size_t j) {
    if (j < 1 || j > kMaxCumulantOrder) {
        throw Error(ErrorCode::out_of_range, "cumulant order j must be in 1.." + std::to_string(kMaxCumulantOrder));
    }
    if (kappa.n < 1) throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
    if (kappa.values.size() < j) throw Error(ErrorCode::out_of_range, "need kappa_1..kappa_j");

    const Scalar n = from_size(kappa.n);
    std::vector<Scalar> n_pow(j + 2);
    n_pow[0] = Scalar(1);
    for (std::size_t r = 1; r < n_pow.size(); ++r) n_pow[r] = n_pow[r - 1] * n;

    Scalar total;
    for (const auto& term : *moment_terms(j)) {
        Scalar kappa_pi(1);
        for (unsigned size : term.block_sizes) {
            kappa_pi *= kappa[size];
            if (kappa_pi.is_zero()) break;
        }
        if (kappa_pi.is_zero()) continue;
        Scalar inner;
        for (std::size_t r = 0; r < term.rho_weights.size(); ++r)
            if (term.rho_weights[r] != 0) inner += integer(term.rho_weights[r]) * n_pow[r];
        total += integer(term.multiplicity * term.mobius) * n_pow[term.blocks] * kappa_pi * inner;
    }
    const Scalar prefactor = (j % 2 == 1 ? Scalar(1) : Scalar(-1)) / (n_pow[j + 1] * integer(factorial(j - 1)));
    return prefactor * total;
}

CumulantVector cumulants_from_moments(const MomentVector& m) {
    require_moments(m, m.n, "cumulants_from_moments");
    const std::size_t n = m.n;
    if (n > kMaxCumulantOrder) throw Error(ErrorCode::size_guard, "cumulants refuse n > 12");
    CumulantVector kappa{n, std::vector<Scalar>(n)};
    for (std::size_t j = 1; j <= n; ++j) {
        // m_j is affine in kappa_j (only pi = 1_j carries it): isolate it.
        kappa.values[j - 1] = Scalar(0);
        const Scalar rest = moments_from_cumulants(kappa, j);
        CumulantVector unit{n, std::vector<Scalar>(n)};
        unit.values[j - 1] = Scalar(1);
        const Scalar leading = moments_from_cumulants(unit, j);
        kappa.values[j - 1] = (m[j] - rest) / leading;
    }
    return kappa;
}

bool has_single_eigenvalue(const Matrix& a) {
    const std::size_t n = a.size();
    if (n < 1) throw Error(ErrorCode::invalid_argument, "empty matrix");
    const Scalar mean = a.trace() / from_size(n);
    return char_poly(a) == Polynomial::power_of_linear(mean, n);
}

Scalar mult_ffp_moment(unsigned k, const MomentVector& ma, const MomentVector& mb) {
    require_same_dimension(ma, mb);
    if (k < 1 || k > 2) throw Error(ErrorCode::out_of_range, "multiplicative moment formulas exist for k = 1, 2");
    require_moments(ma, k, "mult_ffp_moment");
    require_moments(mb, k, "mult_ffp_moment");
    if (k == 1) return ma[1] * mb[1];
    if (ma.n < 2) throw Error(ErrorCode::out_of_range, "the second multiplicative moment needs n >= 2");
    const Scalar n = from_size(ma.n);
    const Scalar a1sq = ma[1] * ma[1];
    const Scalar b1sq = mb[1] * mb[1];
    return n / (n - Scalar(1)) * (ma[2] * b1sq + a1sq * mb[2] - a1sq * b1sq) - ma[2] * mb[2] / (n - Scalar(1));
}

}  // namespace finfree
