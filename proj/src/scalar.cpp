#include "finfree/scalar.hpp"

#include <stdexcept>
#include <utility>

#include "finfree/error.hpp"

namespace finfree {

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
    auto fail = [&]() -> Error {
        return Error(ErrorCode::malformed_json, "invalid scalar literal '" + std::string(whole) + "'");
    };
    if (text.empty()) throw fail();
    std::string_view digits = text;
    if (digits.front() == '+' || digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) throw fail();
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (char c : digits) {
        if (c == '/') {
            if (seen_slash) throw fail();
            seen_slash = true;
        } else if (c >= '0' && c <= '9') {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw fail();
        }
    }
    if (!digit_before || (seen_slash && !digit_after)) throw fail();

    std::string owned(text.front() == '+' ? text.substr(1) : text);
    mpq_class q;
    if (q.set_str(owned, 10) != 0) throw fail();
    if (sgn(q.get_den()) == 0) {
        throw Error(ErrorCode::malformed_json, "zero denominator in '" + std::string(whole) + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace

Scalar::Scalar(long num, unsigned long den) {
    if (den == 0) throw Error(ErrorCode::invalid_argument, "zero denominator");
    re_ = mpq_class(num, den);
    re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    if (text.empty()) throw Error(ErrorCode::malformed_json, "empty scalar literal");
    if (text.back() != 'i') return Scalar(parse_rational(text, text), 0);

    std::string_view body = text.substr(0, text.size() - 1);
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);

    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t pos = body.size(); pos-- > 1;) {
        if (body[pos] == '+' || body[pos] == '-') {
            split = pos;
            break;
        }
    }
    std::string_view real_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view imag_part = split == std::string_view::npos ? body : body.substr(split);

    mpq_class re = real_part.empty() ? mpq_class(0) : parse_rational(real_part, text);
    mpq_class im;
    if (imag_part.empty() || imag_part == "+") {
        im = 1;
    } else if (imag_part == "-") {
        im = -1;
    } else {
        im = parse_rational(imag_part, text);
    }
    return Scalar(std::move(re), std::move(im));
}

Scalar Scalar::pow(unsigned exponent) const {
    Scalar result(1);
    Scalar base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

std::string Scalar::to_string() const {
    if (is_real()) return re_.get_str();
    mpq_class magnitude = abs(im_);
    return re_.get_str() + (sgn(im_) > 0 ? "+" : "-") + magnitude.get_str() + "*i";
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (is_real() && rhs.is_real()) {
        re_ *= rhs.re_;
        return *this;
    }
    mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
    mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero");
    if (rhs.is_real()) {
        re_ /= rhs.re_;
        im_ /= rhs.re_;
        return *this;
    }
    mpq_class norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    mpq_class re = (re_ * rhs.re_ + im_ * rhs.im_) / norm;
    mpq_class im = (im_ * rhs.re_ - re_ * rhs.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    if (k > n) return out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

mpz_class factorial(unsigned long n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace finfree
