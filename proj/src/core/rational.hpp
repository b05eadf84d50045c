/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ratseq {

// Arbitrary-precision integer backing every exact computation in the
// library.  Natural is the same type used where values are nonnegative
// by contract; the checks live at the API boundaries.
using Integer = boost::multiprecision::cpp_int;
using Natural = Integer;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gcd(0, n) is n; gcd(0, 0) is a domain error.
Natural gcd(const Natural& a, const Natural& b);

// Strictly positive rational in canonical reduced form:
// num >= 1, den >= 1, gcd(num, den) = 1.  Immutable after construction.
class PositiveRational {
  public:
    PositiveRational() : num_(1), den_(1) {}
    PositiveRational(Natural num, Natural den);

    const Natural& num() const { return num_; }
    const Natural& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    // "p/q", or bare "p" when q = 1.
    std::string str() const;

    bool operator==(const PositiveRational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const PositiveRational& o) const;

    friend PositiveRational reciprocal(const PositiveRational& r);
    friend PositiveRational add_one(const PositiveRational& r);

  private:
    struct reduced_tag {};
    PositiveRational(Natural num, Natural den, reduced_tag)
        : num_(std::move(num)), den_(std::move(den)) {}

    Natural num_;
    Natural den_;
};

PositiveRational make_rational(const Natural& p, const Natural& q);

// den/num.  Involution.
PositiveRational reciprocal(const PositiveRational& r);

// (num + den)/den.  Preserves reducedness: gcd(num + den, den) = gcd(num, den).
PositiveRational add_one(const PositiveRational& r);

// Exact signed rational: num carries the sign, den >= 1, gcd(|num|, den) = 1.
// Zero is num = 0, den = 1.
class SignedRational {
  public:
    SignedRational() : num_(0), den_(1) {}
    SignedRational(Integer num, Integer den);
    SignedRational(const PositiveRational& r) : num_(r.num()), den_(r.den()) {}
    explicit SignedRational(Integer n) : num_(std::move(n)), den_(1) {}

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
    bool is_zero() const { return num_ == 0; }

    // Magnitude as a PositiveRational; zero has none.
    PositiveRational magnitude() const;

    std::string str() const;

    SignedRational operator-() const;
    SignedRational operator+(const SignedRational& o) const;
    SignedRational operator-(const SignedRational& o) const;
    SignedRational operator*(const SignedRational& o) const;
    SignedRational operator/(const SignedRational& o) const;

    bool operator==(const SignedRational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const SignedRational& o) const;

  private:
    Integer num_;
    Integer den_;
};

SignedRational abs(const SignedRational& x);

// Text format: "p/q" with decimal digits, or bare "p" when q = 1.
PositiveRational parse_positive_rational(std::string_view text);

// Same grammar with an optional leading "-"; "0" is accepted.
SignedRational parse_signed_rational(std::string_view text);

}  // namespace ratseq
