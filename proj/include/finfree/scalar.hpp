#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace finfree {

/// Exact Gaussian rational re + im*i over arbitrary-precision rationals.
///
/// Both parts are kept canonical (lowest terms, positive denominator), so
/// operator== is exact structural equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(long num, unsigned long den);
    explicit Scalar(mpq_class re, mpq_class im = 0);

    /// Parses "p", "p/q", "a+b*i", "a-b*i", "b*i", "i"; throws Error on bad input.
    static Scalar parse(std::string_view text);

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    bool is_one() const noexcept { return is_real() && re_ == 1; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar pow(unsigned exponent) const;

    /// Canonical text form: "p/q" for reals, "a+b*i" / "a-b*i" otherwise,
    /// denominators omitted when 1.
    std::string to_string() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
        return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
        return os << s.to_string();
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

/// Binomial coefficient C(n, k) as an exact big integer; 0 when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

mpz_class factorial(unsigned long n);

}  // namespace finfree
