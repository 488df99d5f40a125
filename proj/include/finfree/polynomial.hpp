#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "finfree/scalar.hpp"

namespace finfree {

/// Univariate polynomial with exact coefficients in descending order:
/// coeffs()[k] is the coefficient a_k of x^(n-k), so a monic p has
/// coeffs()[0] == 1. Characteristic polynomials and convolutions are always
/// monic; derivatives generally are not.
class Polynomial {
public:
    Polynomial() : coeffs_{Scalar(1)} {}
    explicit Polynomial(std::vector<Scalar> coeffs);
    Polynomial(std::initializer_list<Scalar> coeffs) : Polynomial(std::vector<Scalar>(coeffs)) {}

    /// x^n
    static Polynomial monomial(std::size_t n);
    /// (x - root)^n
    static Polynomial power_of_linear(const Scalar& root, std::size_t n);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
    bool is_monic() const noexcept { return coeffs_.front().is_one(); }

    Scalar evaluate(const Scalar& x0) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    std::vector<Scalar> coeffs_;
};

/// Additive finite free convolution p ⊞ q of two monic polynomials of equal
/// degree n >= 1:  c_k = sum_{i+j=k} C(n-i, j) / C(n, j) * a_i * b_j.
Polynomial boxplus(const Polynomial& p, const Polynomial& q);

/// Multiplicative finite free convolution:  c_k = (-1)^k / C(n, k) * a_k * b_k.
Polynomial boxtimes(const Polynomial& p, const Polynomial& q);

/// x -> p(x - shift).
Polynomial shift_argument(const Polynomial& p, const Scalar& shift);

/// k-th formal derivative, 0 <= k <= degree; the result has degree n - k.
Polynomial derivative(const Polynomial& p, std::size_t k);

inline Scalar evaluate(const Polynomial& p, const Scalar& x0) { return p.evaluate(x0); }

}  // namespace finfree
