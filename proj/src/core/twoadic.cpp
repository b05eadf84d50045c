/* SPDX-License-Identifier: Apache-2.0 */

#include "core/twoadic.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace ratseq {

std::optional<Natural> GapStream::next() {
    std::optional<Natural> gap = produce_();
    if (!gap)
        return std::nullopt;
    if (position_ == 0 ? *gap < 0 : *gap < 1)
        throw std::domain_error("invalid gap at position " +
                                std::to_string(position_) + ": must be >= " +
                                (position_ == 0 ? "0" : "1") + ", got " +
                                gap->str());
    ++position_;
    return gap;
}

SignedRational RationalInterval::midpoint() const {
    return (lo + hi) / SignedRational(Integer(2));
}

namespace {

Natural bits_value(const std::vector<bool>& bits) {
    Natural v = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i])
            boost::multiprecision::bit_set(v, i);
    return v;
}

bool all_zero(const std::vector<bool>& bits) {
    return std::find(bits.begin(), bits.end(), true) == bits.end();
}

std::size_t to_bit_position(const Natural& e) {
    if (e > std::numeric_limits<std::size_t>::max() / 2)
        throw std::overflow_error("bit position " + e.str() +
                                  " exceeds addressable storage");
    return e.convert_to<std::size_t>();
}

}  // namespace

TwoAdicInteger TwoAdicInteger::from_natural(Natural n) {
    if (n <= 0)
        throw std::domain_error("finite numeral must be >= 1");
    return TwoAdicInteger(std::variant<Natural, Periodic, GapSource>(std::move(n)));
}

TwoAdicInteger TwoAdicInteger::from_gap_source(GapSource source) {
    return TwoAdicInteger(
        std::variant<Natural, Periodic, GapSource>(std::move(source)));
}

TwoAdicInteger TwoAdicInteger::make_periodic(Periodic p) {
    // All-zero period means the numeral is really finite.
    if (all_zero(p.period)) {
        Natural v = bits_value(p.suffix);
        if (v == 0)
            throw ParseError("numeral denotes zero");
        return from_natural(std::move(v));
    }

    // Least period: the minimal period of a purely periodic word divides
    // every period, so only divisors of the block length need checking.
    std::size_t len = p.period.size();
    for (std::size_t d = 1; d < len; ++d) {
        if (len % d != 0)
            continue;
        bool matches = true;
        for (std::size_t j = d; j < len && matches; ++j)
            matches = p.period[j] == p.period[j % d];
        if (matches) {
            p.period.resize(d);
            len = d;
            break;
        }
    }

    // Shortest suffix: while the top suffix bit equals the top period bit,
    // the period can be rotated down one position to absorb it.
    while (!p.suffix.empty() && p.suffix.back() == p.period.back()) {
        p.period.pop_back();
        p.period.insert(p.period.begin(), p.suffix.back());
        p.suffix.pop_back();
    }

    return TwoAdicInteger(std::variant<Natural, Periodic, GapSource>(std::move(p)));
}

TwoAdicInteger TwoAdicInteger::parse(std::string_view numeral) {
    auto bad = [&](const std::string& what) -> ParseError {
        return ParseError("invalid 2-adic numeral \"" + std::string(numeral) +
                          "\": " + what);
    };
    std::string_view rest = numeral;
    std::vector<bool> period;  // most-significant-left while scanning
    if (!rest.empty() && rest.front() == '(') {
        auto close = rest.find(')');
        if (close == std::string_view::npos)
            throw bad("missing ')'");
        std::string_view block = rest.substr(1, close - 1);
        if (block.empty())
            throw bad("empty period");
        for (char c : block) {
            if (c != '0' && c != '1')
                throw bad(std::string("unexpected character '") + c + "'");
            period.push_back(c == '1');
        }
        rest.remove_prefix(close + 1);
    }
    std::vector<bool> suffix;
    for (char c : rest) {
        if (c != '0' && c != '1')
            throw bad(std::string("unexpected character '") + c + "'");
        suffix.push_back(c == '1');
    }
    if (period.empty() && suffix.empty())
        throw bad("empty numeral");

    if (period.empty()) {
        Natural v = bits_value({suffix.rbegin(), suffix.rend()});
        if (v == 0)
            throw bad("numeral denotes zero");
        return from_natural(std::move(v));
    }
    Periodic p;
    p.suffix.assign(suffix.rbegin(), suffix.rend());
    p.period.assign(period.rbegin(), period.rend());
    if (all_zero(p.period) && all_zero(p.suffix))
        throw bad("numeral denotes zero");
    return make_periodic(std::move(p));
}

TwoAdicInteger::Form TwoAdicInteger::form() const {
    switch (repr_.index()) {
        case 0: return Form::finite;
        case 1: return Form::periodic;
        default: return Form::stream;
    }
}

std::string TwoAdicInteger::render() const {
    if (const auto* n = std::get_if<Natural>(&repr_)) {
        std::string out;
        for (std::size_t i = boost::multiprecision::msb(*n) + 1; i-- > 0;)
            out += boost::multiprecision::bit_test(*n, i) ? '1' : '0';
        return out;
    }
    if (const auto* p = std::get_if<Periodic>(&repr_)) {
        std::string out = "(";
        for (std::size_t i = p->period.size(); i-- > 0;)
            out += p->period[i] ? '1' : '0';
        out += ')';
        for (std::size_t i = p->suffix.size(); i-- > 0;)
            out += p->suffix[i] ? '1' : '0';
        return out;
    }
    throw std::domain_error("stream-backed numeral has no finite rendering");
}

SignedRational TwoAdicInteger::rational_value() const {
    if (const auto* n = std::get_if<Natural>(&repr_))
        return SignedRational(Integer(*n));
    if (const auto* p = std::get_if<Periodic>(&repr_)) {
        Natural suffix = bits_value(p->suffix);
        Natural block = bits_value(p->period);
        Natural den = (Natural(1) << p->period.size()) - 1;
        Integer num = Integer(suffix) * den - (Integer(block) << p->suffix.size());
        return SignedRational(std::move(num), Integer(den));
    }
    throw std::domain_error(
        "stream-backed numeral is not necessarily rational");
}

GapStream TwoAdicInteger::gaps() const {
    if (const auto* n = std::get_if<Natural>(&repr_)) {
        GapSequence g = gaps_from_index(*n);
        return GapStream([g = std::move(g), i = std::size_t(0)]() mutable
                         -> std::optional<Natural> {
            if (i >= g.gaps.size())
                return std::nullopt;
            return g.gaps[i++];
        });
    }
    if (const auto* p = std::get_if<Periodic>(&repr_)) {
        // Scan the infinite word for set bits; the period is not all-zero,
        // so every scan terminates within one period length.
        auto bit_at = [suffix = p->suffix, period = p->period](std::uint64_t i) {
            if (i < suffix.size())
                return static_cast<bool>(suffix[i]);
            return static_cast<bool>(period[(i - suffix.size()) % period.size()]);
        };
        return GapStream([bit_at, pos = std::uint64_t(0),
                          started = false]() mutable -> std::optional<Natural> {
            std::uint64_t i = started ? pos + 1 : 0;
            while (!bit_at(i))
                ++i;
            Natural gap = started ? Natural(i - pos) : Natural(i);
            pos = i;
            started = true;
            return gap;
        });
    }
    return std::get<GapSource>(repr_)();
}

Natural TwoAdicInteger::truncate(std::size_t ones_count) const {
    if (ones_count < 1)
        throw std::domain_error("truncation needs at least one set bit");
    GapStream stream = gaps();
    Natural index = 0;
    Natural exponent = 0;
    for (std::size_t k = 0; k < ones_count; ++k) {
        std::optional<Natural> gap = stream.next();
        if (!gap)
            throw std::domain_error("numeral has only " + std::to_string(k) +
                                    " set bits; requested " +
                                    std::to_string(ones_count));
        exponent += *gap;
        boost::multiprecision::bit_set(index, to_bit_position(exponent));
    }
    return index;
}

namespace {

RationalInterval sorted_bracket(const ConvergentIterator& it) {
    SignedRational a = it.prev_value();
    SignedRational b = it.value();
    return a < b ? RationalInterval{std::move(a), std::move(b)}
                 : RationalInterval{std::move(b), std::move(a)};
}

}  // namespace

RationalInterval TwoAdicInteger::eval_real(unsigned precision_bits) const {
    if (precision_bits < 1)
        throw std::domain_error("precision must be >= 1 bit");

    // Finite numerals evaluate exactly at any precision.
    if (const auto* n = std::get_if<Natural>(&repr_)) {
        SignedRational v = eval_cf(cf_from_gaps(gaps_from_index(*n)));
        return RationalInterval{v, v};
    }

    GapStream stream = gaps();
    const Natural bound = Natural(1) << precision_bits;

    if (std::holds_alternative<Periodic>(repr_)) {
        // The gap stream never ends, so pull exactly until the convergent
        // gap 1/(q(m) q(m-1)) meets the bound.
        ConvergentIterator it{Integer(*stream.next())};
        for (;;) {
            it.advance(*stream.next());
            if (it.den() * it.prev_den() >= bound)
                return sorted_bracket(it);
        }
    }

    std::optional<Natural> first = stream.next();
    if (!first)
        throw std::domain_error("numeral has no set bits");
    std::optional<Natural> lookahead = stream.next();
    if (!lookahead) {
        // Single set bit 2^m: the value is the integer m+1.
        SignedRational v(Integer(*first + 1));
        return RationalInterval{v, v};
    }

    // One-gap lookahead distinguishes "last gap" (final quotient 1+g) from
    // an interior gap (quotient g); a stream that exhausts within the
    // demanded pulls collapses to its exact value.
    ConvergentIterator it{Integer(*first)};
    for (;;) {
        Natural gap = std::move(*lookahead);
        lookahead = stream.next();
        if (!lookahead) {
            it.advance(gap + 1);
            SignedRational v = it.value();
            return RationalInterval{v, v};
        }
        it.advance(gap);
        if (it.den() * it.prev_den() >= bound)
            return sorted_bracket(it);
    }
}

bool TwoAdicInteger::equals(const TwoAdicInteger& other) const {
    if (form() == Form::stream || other.form() == Form::stream)
        throw std::domain_error("stream-backed numerals have no decidable "
                                "equality");
    if (repr_.index() != other.repr_.index())
        return false;
    if (const auto* n = std::get_if<Natural>(&repr_))
        return *n == std::get<Natural>(other.repr_);
    return std::get<Periodic>(repr_) == std::get<Periodic>(other.repr_);
}

PositiveRational norm2(const SignedRational& x) {
    if (x.is_zero())
        throw std::domain_error("the 2-adic norm of zero is not defined here");
    using boost::multiprecision::lsb;
    using boost::multiprecision::abs;
    Integer num = abs(x.num());
    std::size_t num_twos = lsb(num);
    std::size_t den_twos = lsb(x.den());
    if (num_twos >= den_twos)
        return PositiveRational(1, Natural(1) << (num_twos - den_twos));
    return PositiveRational(Natural(1) << (den_twos - num_twos), 1);
}

GapStream euler_e_gaps() {
    return GapStream([i = std::uint64_t(0)]() mutable -> std::optional<Natural> {
        std::uint64_t n = i++;
        if (n == 0)
            return Natural(2);
        if (n % 3 == 2)
            return Natural(2 * (n + 1) / 3);
        return Natural(1);
    });
}

TwoAdicInteger sqrt2_index() {
    return TwoAdicInteger::parse("(01)0");
}

TwoAdicInteger phi_recip_index() {
    return TwoAdicInteger::parse("(1)");
}

TwoAdicInteger e_index() {
    return TwoAdicInteger::from_gap_source([] { return euler_e_gaps(); });
}

}  // namespace ratseq
