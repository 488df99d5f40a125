#include "finfree/polynomial.hpp"

#include <sstream>
#include <utility>

#include "finfree/error.hpp"

namespace finfree {

namespace {

void require_convolvable(const Polynomial& p, const Polynomial& q) {
    if (p.degree() != q.degree()) {
        throw Error(ErrorCode::degree_mismatch, "convolution needs equal degrees, got " +
                                                    std::to_string(p.degree()) + " and " +
                                                    std::to_string(q.degree()));
    }
    if (p.degree() < 1) throw Error(ErrorCode::invalid_argument, "convolution needs degree >= 1");
    if (!p.is_monic() || !q.is_monic()) throw Error(ErrorCode::not_monic, "convolution inputs must be monic");
}

Scalar from_int(const mpz_class& z) { return Scalar(mpq_class(z)); }

}  // namespace

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::invalid_argument, "polynomial needs at least one coefficient");
}

Polynomial Polynomial::monomial(std::size_t n) {
    std::vector<Scalar> c(n + 1);
    c[0] = Scalar(1);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::power_of_linear(const Scalar& root, std::size_t n) {
    return shift_argument(monomial(n), root);
}

Scalar Polynomial::evaluate(const Scalar& x0) const {
    Scalar acc;
    for (const auto& c : coeffs_) {
        acc *= x0;
        acc += c;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    std::ostringstream os;
    const std::size_t n = degree();
    bool first = true;
    for (std::size_t k = 0; k <= n; ++k) {
        const Scalar& c = coeffs_[k];
        if (c.is_zero() && !(n == 0)) continue;
        const std::size_t power = n - k;
        std::string body;
        bool negative = c.is_real() && sgn(c.re()) < 0;
        Scalar magnitude = negative ? -c : c;
        if (magnitude.is_one() && power > 0) {
            body.clear();
        } else if (c.is_real()) {
            body = magnitude.to_string();
        } else {
            body = "(" + c.to_string() + ")";
            negative = false;
        }
        if (power > 0) {
            if (!body.empty()) body += "*";
            body += power == 1 ? "x" : "x^" + std::to_string(power);
        }
        if (first) {
            os << (negative ? "-" : "") << body;
        } else {
            os << (negative ? " - " : " + ") << body;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Polynomial boxplus(const Polynomial& p, const Polynomial& q) {
    require_convolvable(p, q);
    const std::size_t n = p.degree();
    std::vector<Scalar> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Scalar sum;
        for (std::size_t i = 0; i <= k; ++i) {
            const std::size_t j = k - i;
            if (p[i].is_zero() || q[j].is_zero()) continue;
            mpq_class weight(binomial(n - i, j), binomial(n, j));
            weight.canonicalize();
            sum += Scalar(weight) * p[i] * q[j];
        }
        out[k] = std::move(sum);
    }
    return Polynomial(std::move(out));
}

Polynomial boxtimes(const Polynomial& p, const Polynomial& q) {
    require_convolvable(p, q);
    const std::size_t n = p.degree();
    std::vector<Scalar> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        mpq_class weight(k % 2 == 0 ? 1 : -1, 1);
        weight /= binomial(n, k);
        out[k] = Scalar(weight) * p[k] * q[k];
    }
    return Polynomial(std::move(out));
}

Polynomial shift_argument(const Polynomial& p, const Scalar& shift) {
    // p(x - s) = sum_k a_k (x - s)^(n-k); (x - s)^m contributes C(m, r) (-s)^r to x^(m-r).
    const std::size_t n = p.degree();
    std::vector<Scalar> out(n + 1);
    const Scalar neg = -shift;
    std::vector<Scalar> neg_powers(n + 1);
    neg_powers[0] = Scalar(1);
    for (std::size_t r = 1; r <= n; ++r) neg_powers[r] = neg_powers[r - 1] * neg;
    for (std::size_t k = 0; k <= n; ++k) {
        if (p[k].is_zero()) continue;
        const std::size_t m = n - k;
        for (std::size_t r = 0; r <= m; ++r) {
            out[k + r] += p[k] * from_int(binomial(m, r)) * neg_powers[r];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p, std::size_t k) {
    const std::size_t n = p.degree();
    if (k > n) {
        throw Error(ErrorCode::out_of_range, "derivative order " + std::to_string(k) + " exceeds degree " +
                                                 std::to_string(n));
    }
    std::vector<Scalar> out(n - k + 1);
    for (std::size_t idx = 0; idx + k <= n; ++idx) {
        // x^(n-idx) -> (n-idx)!/(n-idx-k)! x^(n-idx-k)
        const std::size_t power = n - idx;
        mpz_class falling = factorial(power) / factorial(power - k);
        out[idx] = p[idx] * from_int(falling);
    }
    return Polynomial(std::move(out));
}

}  // namespace finfree
