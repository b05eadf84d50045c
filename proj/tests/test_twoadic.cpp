/* SPDX-License-Identifier: Apache-2.0 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/sequence.hpp"
#include "core/twoadic.hpp"
#include "helpers.hpp"

#include <random>
#include <string>
#include <vector>

using namespace ratseq;

namespace {

SignedRational rat(long num, long den = 1) {
    return SignedRational(Integer(num), Integer(den));
}

std::vector<Natural> take_gaps(const TwoAdicInteger& z, std::size_t count) {
    GapStream stream = z.gaps();
    std::vector<Natural> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto gap = stream.next();
        if (!gap)
            break;
        out.push_back(*gap);
    }
    return out;
}

// Convergents c0..c(count-1) of the infinite continued fraction read off
// the numeral's gaps.
std::vector<Convergent> numeral_convergents(const TwoAdicInteger& z,
                                            std::size_t count) {
    GapStream stream = z.gaps();
    Natural leading = *stream.next();
    return convergents(
        Integer(leading),
        [stream = std::move(stream)]() mutable { return stream.next(); }, count);
}

using testing::random_periodic_numeral;

}  // namespace

TEST_CASE("2-adic norm") {
    CHECK(norm2(rat(600)) == PositiveRational(1, 8));
    CHECK(norm2(rat(1)) == PositiveRational(1, 1));
    CHECK(norm2(rat(-2, 3)) == PositiveRational(1, 2));
    CHECK(norm2(rat(1, 2)) == PositiveRational(2, 1));
    CHECK(norm2(rat(3, 20)) == PositiveRational(4, 1));
    CHECK_THROWS_AS(norm2(SignedRational()), std::domain_error);
}

TEST_CASE("numeral parsing and canonical rendering") {
    CHECK(TwoAdicInteger::parse("1001011000").form() ==
          TwoAdicInteger::Form::finite);
    CHECK(TwoAdicInteger::parse("1001011000").render() == "1001011000");
    CHECK(TwoAdicInteger::parse("0011").render() == "11");

    // least period and shortest suffix: (01)0 is the word ...0101010
    CHECK(TwoAdicInteger::parse("(01)0").render() == "(10)");
    CHECK(TwoAdicInteger::parse("(1)").render() == "(1)");
    CHECK(TwoAdicInteger::parse("(1111)").render() == "(1)");
    CHECK(TwoAdicInteger::parse("(1010)").render() == "(10)");
    CHECK(TwoAdicInteger::parse("(10)1").render() == "(01)");
    CHECK(TwoAdicInteger::parse("(1)1").render() == "(1)");
    CHECK(TwoAdicInteger::parse("(1)001").render() == "(1)001");
    CHECK(TwoAdicInteger::parse("(0)101").render() == "101");

    CHECK(TwoAdicInteger::parse("(01)0").equals(TwoAdicInteger::parse("(10)")));
    CHECK_FALSE(TwoAdicInteger::parse("(10)").equals(TwoAdicInteger::parse("(01)")));
    CHECK_FALSE(
        TwoAdicInteger::parse("101").equals(TwoAdicInteger::parse("(1)101")));

    CHECK_THROWS_AS(TwoAdicInteger::parse(""), ParseError);
    CHECK_THROWS_AS(TwoAdicInteger::parse("()"), ParseError);
    CHECK_THROWS_AS(TwoAdicInteger::parse("(0)"), ParseError);
    CHECK_THROWS_AS(TwoAdicInteger::parse("0"), ParseError);
    CHECK_THROWS_AS(TwoAdicInteger::parse("000"), ParseError);
    CHECK_THROWS_AS(TwoAdicInteger::parse("(0)00"), ParseError);
    CHECK_THROWS_AS(TwoAdicInteger::parse("102"), ParseError);
    CHECK_THROWS_AS(TwoAdicInteger::parse("(01"), ParseError);
    CHECK_THROWS_AS(TwoAdicInteger::parse("(01)2"), ParseError);
    CHECK_THROWS_AS(TwoAdicInteger::parse("(01)(1)"), ParseError);
}

TEST_CASE("rational value of finite and periodic numerals") {
    CHECK(TwoAdicInteger::parse("(01)0").rational_value() == rat(-2, 3));
    CHECK(TwoAdicInteger::parse("(1)").rational_value() == rat(-1));
    CHECK(TwoAdicInteger::parse("1001011000").rational_value() == rat(600));
    CHECK(TwoAdicInteger::parse("(1)0").rational_value() == rat(-2));
    CHECK(TwoAdicInteger::parse("(0)101").rational_value() == rat(5));
    CHECK(TwoAdicInteger::parse("(1)001").rational_value() == rat(-7));
    CHECK_THROWS_AS(e_index().rational_value(), std::domain_error);
}

TEST_CASE("value is preserved by canonicalization") {
    std::mt19937_64 rng(0x2ad1c);
    for (int trial = 0; trial < 300; ++trial) {
        std::string text = random_periodic_numeral(rng);
        TwoAdicInteger z = TwoAdicInteger::parse(text);
        SignedRational direct = [&] {
            // geometric series evaluated from the raw, uncanonicalized text
            auto close = text.find(')');
            std::string block = text.substr(1, close - 1);
            std::string suffix = text.substr(close + 1);
            Integer block_value = 0;
            for (char c : block)
                block_value = 2 * block_value + (c == '1' ? 1 : 0);
            Integer suffix_value = 0;
            for (char c : suffix)
                suffix_value = 2 * suffix_value + (c == '1' ? 1 : 0);
            Integer period_scale = (Integer(1) << block.size()) - 1;
            return SignedRational(
                suffix_value * period_scale - (block_value << suffix.size()),
                period_scale);
        }();
        REQUIRE(z.rational_value() == direct);
    }
}

TEST_CASE("parse/render round trip on random periodic numerals") {
    std::mt19937_64 rng(0xc0dec);
    for (int trial = 0; trial < 1000; ++trial) {
        std::string text = random_periodic_numeral(rng);
        TwoAdicInteger z = TwoAdicInteger::parse(text);
        if (z.form() == TwoAdicInteger::Form::finite)
            continue;  // degenerate block like (0...0) with nonzero suffix
        std::string canonical = z.render();
        TwoAdicInteger reparsed = TwoAdicInteger::parse(canonical);
        REQUIRE(reparsed.equals(z));
        REQUIRE(reparsed.render() == canonical);
        REQUIRE(reparsed.rational_value() == z.rational_value());
    }
}

TEST_CASE("gap streams of the pinned numerals") {
    CHECK(take_gaps(TwoAdicInteger::parse("(01)0"), 5) ==
          std::vector<Natural>{1, 2, 2, 2, 2});
    CHECK(take_gaps(TwoAdicInteger::parse("(1)"), 5) ==
          std::vector<Natural>{0, 1, 1, 1, 1});
    CHECK(take_gaps(TwoAdicInteger::parse("1001011000"), 10) ==
          std::vector<Natural>{3, 1, 2, 3});
}

TEST_CASE("fresh cursors are independent and repeatable") {
    TwoAdicInteger e = e_index();
    CHECK(take_gaps(e, 7) == take_gaps(e, 7));
    GapStream a = e.gaps();
    GapStream b = e.gaps();
    CHECK(*a.next() == 2);
    CHECK(*a.next() == 1);
    CHECK(*b.next() == 2);  // b starts over
}

TEST_CASE("gap stream invariants are enforced with positions") {
    auto bad_source = [] {
        return GapStream([i = 0]() mutable -> std::optional<Natural> {
            return Natural(i++ == 0 ? 3 : 0);  // second gap invalid
        });
    };
    TwoAdicInteger z = TwoAdicInteger::from_gap_source(bad_source);
    CHECK_THROWS_WITH_AS(z.truncate(3),
                         "invalid gap at position 1: must be >= 1, got 0",
                         std::domain_error);
    CHECK_THROWS_AS(z.eval_real(16), std::domain_error);

    auto negative_first = [] {
        return GapStream([]() -> std::optional<Natural> { return Natural(-1); });
    };
    CHECK_THROWS_WITH_AS(TwoAdicInteger::from_gap_source(negative_first).truncate(1),
                         "invalid gap at position 0: must be >= 0, got -1",
                         std::domain_error);
}

TEST_CASE("truncate keeps the lowest set bits") {
    CHECK(TwoAdicInteger::parse("(01)0").truncate(3) == 42);
    CHECK(TwoAdicInteger::parse("(1)").truncate(4) == 15);
    CHECK(TwoAdicInteger::parse("1001011000").truncate(4) == 600);
    CHECK(TwoAdicInteger::parse("1001011000").truncate(2) == 24);
    CHECK_THROWS_WITH_AS(TwoAdicInteger::parse("1001011000").truncate(5),
                         "numeral has only 4 set bits; requested 5",
                         std::domain_error);
    CHECK_THROWS_AS(TwoAdicInteger::parse("(1)").truncate(0), std::domain_error);
}

TEST_CASE("eval_real collapses on finite numerals") {
    RationalInterval i = TwoAdicInteger::parse("1001011000").eval_real(8);
    CHECK(i.lo == i.hi);
    CHECK(i.lo == rat(48, 13));
    CHECK(i.lo == SignedRational(eval_index(600)));

    RationalInterval single = TwoAdicInteger::parse("100000").eval_real(4);
    CHECK(single.lo == rat(6));

    // agreement with the sequence over many finite numerals
    for (std::size_t n = 1; n <= 500; ++n) {
        TwoAdicInteger z = TwoAdicInteger::from_natural(n);
        RationalInterval v = z.eval_real(4);
        REQUIRE(v.lo == v.hi);
        REQUIRE(v.lo == SignedRational(eval_index(n)));
    }
}

TEST_CASE("eval_real brackets sqrt(2) at the requested width") {
    TwoAdicInteger z = sqrt2_index();
    RationalInterval i = z.eval_real(60);
    CHECK(i.lo < i.hi);
    CHECK(i.lo * i.lo < rat(2));
    CHECK(i.hi * i.hi > rat(2));
    CHECK(i.width() <= testing::pow2(-60));
    // consecutive convergents: width is exactly 1/(q(m) q(m+1))
    CHECK(i.width() == SignedRational(Integer(1), i.lo.den() * i.hi.den()));
}

TEST_CASE("eval_real brackets the golden ratio reciprocal") {
    RationalInterval i = phi_recip_index().eval_real(60);
    // 1/phi is the positive root of x^2 + x - 1
    CHECK(i.lo * i.lo + i.lo - rat(1) < rat(0));
    CHECK(i.hi * i.hi + i.hi - rat(1) > rat(0));
    CHECK(i.width() <= testing::pow2(-60));
}

TEST_CASE("higher precision nests strictly inside lower") {
    for (const TwoAdicInteger& z :
         {sqrt2_index(), phi_recip_index(), e_index(),
          TwoAdicInteger::parse("(1101)011")}) {
        RationalInterval coarse = z.eval_real(20);
        RationalInterval fine = z.eval_real(64);
        CHECK(fine.lo >= coarse.lo);
        CHECK(fine.hi <= coarse.hi);
        CHECK(fine.width() < coarse.width());
    }
}

TEST_CASE("euler e gap stream") {
    GapStream gs = euler_e_gaps();
    std::vector<Natural> first7;
    for (int i = 0; i < 7; ++i)
        first7.push_back(*gs.next());
    CHECK(first7 == std::vector<Natural>{2, 1, 2, 1, 1, 4, 1});

    GapStream all = euler_e_gaps();
    std::vector<Natural> gaps;
    for (int i = 0; i < 32; ++i)
        gaps.push_back(*all.next());
    for (unsigned k = 1; k <= 10; ++k)
        CHECK(gaps[3 * k - 1] == 2 * k);
}

TEST_CASE("eval_real of the e index brackets the series value") {
    // oracle: e is within (sum, sum + 2/41!) of the 40-term series
    SignedRational series = testing::e_series_oracle(40);
    Natural f41 = 1;
    for (unsigned k = 2; k <= 41; ++k)
        f41 *= k;
    SignedRational tail_bound = SignedRational(Integer(2), Integer(f41));

    RationalInterval i = e_index().eval_real(60);
    CHECK(i.lo < series);
    CHECK(i.hi > series + tail_bound);
    CHECK(i.width() <= testing::pow2(-60));
}

TEST_CASE("truncated indices converge inside the convergent brackets") {
    std::mt19937_64 rng(0x7ad1c);
    std::vector<TwoAdicInteger> numerals = {sqrt2_index(), phi_recip_index(),
                                            e_index()};
    for (int trial = 0; trial < 50; ++trial)
        numerals.push_back(
            TwoAdicInteger::parse(random_periodic_numeral(rng)));

    for (const TwoAdicInteger& z : numerals) {
        if (z.form() == TwoAdicInteger::Form::finite)
            continue;
        auto cs = numeral_convergents(z, 41);
        for (std::size_t m = 2; m <= 40; ++m) {
            SignedRational v = SignedRational(eval_index(z.truncate(m)));
            const SignedRational& a = cs[m - 2].value;
            const SignedRational& b = cs[m - 1].value;
            const SignedRational& lo = a < b ? a : b;
            const SignedRational& hi = a < b ? b : a;
            REQUIRE(v > lo);
            REQUIRE(v < hi);
        }
        // bracket widths shrink monotonically once the recurrence is rolling
        for (std::size_t m = 3; m <= 40; ++m) {
            SignedRational prev = abs(cs[m - 2].value - cs[m - 3].value);
            SignedRational cur = abs(cs[m - 1].value - cs[m - 2].value);
            REQUIRE(cur < prev);
        }
    }
}

TEST_CASE("the all-ones truncations are the Fibonacci ratios") {
    TwoAdicInteger ones = phi_recip_index();
    for (std::size_t n = 2; n <= 60; ++n) {
        Natural index = ones.truncate(n);
        CHECK(index == (Natural(1) << n) - 1);
        CHECK(eval_index(index) ==
              PositiveRational(testing::fibonacci(n), testing::fibonacci(n + 1)));
    }
    // at n = 60 the ratio sits within 2^-80 of the bracketed limit
    RationalInterval limit = phi_recip_index().eval_real(100);
    SignedRational ratio(PositiveRational(testing::fibonacci(60),
                                          testing::fibonacci(61)));
    CHECK(abs(ratio - limit.midpoint()) < testing::pow2(-80));
}

TEST_CASE("built-in constants") {
    CHECK(sqrt2_index().rational_value() == rat(-2, 3));
    CHECK(phi_recip_index().rational_value() == rat(-1));
    CHECK(sqrt2_index().render() == "(10)");
    CHECK(phi_recip_index().render() == "(1)");
    CHECK(e_index().form() == TwoAdicInteger::Form::stream);
    CHECK_THROWS_AS(e_index().render(), std::domain_error);
    CHECK_THROWS_AS(e_index().equals(e_index()), std::domain_error);

    RationalInterval i = sqrt2_index().eval_real(30);
    CHECK(i.lo * i.lo < rat(2));
    CHECK(i.hi * i.hi > rat(2));
}

TEST_CASE("from_natural rejects zero") {
    CHECK_THROWS_AS(TwoAdicInteger::from_natural(0), std::domain_error);
    CHECK(TwoAdicInteger::from_natural(600).render() == "1001011000");
}
