/* SPDX-License-Identifier: Apache-2.0 */

#include "core/rational.hpp"

#include <utility>

namespace ratseq {

Natural gcd(const Natural& a, const Natural& b) {
    if (a == 0 && b == 0)
        throw std::domain_error("gcd(0, 0) is undefined");
    return boost::multiprecision::gcd(a, b);
}

PositiveRational::PositiveRational(Natural num, Natural den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_ <= 0)
        throw std::domain_error("rational numerator must be >= 1");
    if (den_ <= 0)
        throw std::domain_error("rational denominator must be >= 1");
    Natural g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string PositiveRational::str() const {
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

std::strong_ordering PositiveRational::operator<=>(const PositiveRational& o) const {
    Integer lhs = num_ * o.den_;
    Integer rhs = o.num_ * den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

PositiveRational make_rational(const Natural& p, const Natural& q) {
    return PositiveRational(p, q);
}

PositiveRational reciprocal(const PositiveRational& r) {
    return PositiveRational(r.den_, r.num_, PositiveRational::reduced_tag{});
}

PositiveRational add_one(const PositiveRational& r) {
    return PositiveRational(r.num_ + r.den_, r.den_, PositiveRational::reduced_tag{});
}

SignedRational::SignedRational(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0)
        throw std::domain_error("rational denominator must be nonzero");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Natural g = gcd(boost::multiprecision::abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

PositiveRational SignedRational::magnitude() const {
    if (num_ == 0)
        throw std::domain_error("zero has no magnitude");
    return PositiveRational(boost::multiprecision::abs(num_), den_);
}

std::string SignedRational::str() const {
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

SignedRational SignedRational::operator-() const {
    SignedRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

SignedRational SignedRational::operator+(const SignedRational& o) const {
    return SignedRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

SignedRational SignedRational::operator-(const SignedRational& o) const {
    return SignedRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

SignedRational SignedRational::operator*(const SignedRational& o) const {
    return SignedRational(num_ * o.num_, den_ * o.den_);
}

SignedRational SignedRational::operator/(const SignedRational& o) const {
    if (o.num_ == 0)
        throw std::domain_error("division by zero");
    return SignedRational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering SignedRational::operator<=>(const SignedRational& o) const {
    Integer lhs = num_ * o.den_;
    Integer rhs = o.num_ * den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

SignedRational abs(const SignedRational& x) {
    return x.sign() < 0 ? -x : x;
}

namespace {

// digits [ "/" digits ], no sign
std::pair<Natural, Natural> parse_fraction_body(std::string_view text,
                                                std::string_view whole) {
    auto parse_digits = [&](std::string_view part) -> Natural {
        if (part.empty())
            throw ParseError("invalid rational \"" + std::string(whole) +
                             "\": empty number");
        for (char c : part) {
            if (c < '0' || c > '9')
                throw ParseError("invalid rational \"" + std::string(whole) +
                                 "\": unexpected character '" + c + "'");
        }
        return Natural(std::string(part));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return {parse_digits(text), Natural(1)};
    return {parse_digits(text.substr(0, slash)),
            parse_digits(text.substr(slash + 1))};
}

}  // namespace

PositiveRational parse_positive_rational(std::string_view text) {
    auto [p, q] = parse_fraction_body(text, text);
    if (p == 0 || q == 0)
        throw std::domain_error("rational \"" + std::string(text) +
                                "\" is not strictly positive");
    return PositiveRational(p, q);
}

SignedRational parse_signed_rational(std::string_view text) {
    bool negative = !text.empty() && text.front() == '-';
    auto body = negative ? text.substr(1) : text;
    auto [p, q] = parse_fraction_body(body, text);
    if (q == 0)
        throw std::domain_error("rational \"" + std::string(text) +
                                "\" has a zero denominator");
    Integer num = negative ? Integer(-p) : Integer(p);
    return SignedRational(std::move(num), std::move(q));
}

}  // namespace ratseq
