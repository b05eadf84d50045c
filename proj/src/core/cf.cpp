/* SPDX-License-Identifier: Apache-2.0 */

#include "core/cf.hpp"

#include <cassert>
#include <cctype>
#include <limits>
#include <utility>

namespace ratseq {

namespace {

std::size_t to_bit_position(const Natural& e) {
    if (e > std::numeric_limits<std::size_t>::max() / 2)
        throw std::overflow_error("bit position " + e.str() +
                                  " exceeds addressable storage");
    return e.convert_to<std::size_t>();
}

}  // namespace

void validate_gaps(const GapSequence& g) {
    if (g.gaps.empty())
        throw std::domain_error("gap sequence must be nonempty");
    if (g.gaps.front() < 0)
        throw std::domain_error("gap 0 must be >= 0");
    for (std::size_t i = 1; i < g.gaps.size(); ++i) {
        if (g.gaps[i] < 1)
            throw std::domain_error("gap " + std::to_string(i) + " must be >= 1");
    }
}

void validate_cf(const FiniteCF& cf) {
    for (std::size_t i = 0; i < cf.quotients.size(); ++i) {
        if (cf.quotients[i] < 1)
            throw std::domain_error("continued fraction quotient " +
                                    std::to_string(i + 1) + " must be >= 1");
    }
}

bool is_canonical(const FiniteCF& cf) {
    return cf.quotients.empty() || cf.quotients.back() >= 2;
}

GapSequence gaps_from_index(const Natural& n) {
    if (n <= 0)
        throw std::domain_error("index must be >= 1");
    GapSequence g;
    std::size_t top = boost::multiprecision::msb(n);
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t i = boost::multiprecision::lsb(n); i <= top; ++i) {
        if (!boost::multiprecision::bit_test(n, i))
            continue;
        g.gaps.emplace_back(first ? i : i - prev);
        prev = i;
        first = false;
    }
    return g;
}

Natural index_from_gaps(const GapSequence& g) {
    validate_gaps(g);
    Natural n = 0;
    Natural exponent = 0;
    for (const Natural& gap : g.gaps) {
        exponent += gap;
        boost::multiprecision::bit_set(n, to_bit_position(exponent));
    }
    return n;
}

FiniteCF cf_from_gaps(const GapSequence& g) {
    validate_gaps(g);
    if (g.gaps.size() == 1)
        return FiniteCF{Integer(g.gaps.front() + 1), {}};
    FiniteCF cf{Integer(g.gaps.front()), {}};
    cf.quotients.assign(g.gaps.begin() + 1, g.gaps.end() - 1);
    cf.quotients.push_back(g.gaps.back() + 1);
    return cf;
}

GapSequence gaps_from_cf(const FiniteCF& cf) {
    validate_cf(cf);
    if (cf.leading < 0)
        throw std::domain_error("continued fraction with negative leading term "
                                "has no index");
    if (cf.quotients.empty()) {
        if (cf.leading == 0)
            throw std::domain_error("continued fraction denotes zero; no index");
        return GapSequence{{Natural(cf.leading - 1)}};
    }
    if (!is_canonical(cf))
        throw std::domain_error("continued fraction is not canonical "
                                "(final quotient 1)");
    GapSequence g;
    g.gaps.reserve(cf.quotients.size() + 1);
    g.gaps.emplace_back(cf.leading);
    g.gaps.insert(g.gaps.end(), cf.quotients.begin(), cf.quotients.end() - 1);
    g.gaps.push_back(cf.quotients.back() - 1);
    return g;
}

FiniteCF encode_euclid(const PositiveRational& q) {
    Natural a = q.num();
    Natural b = q.den();
    FiniteCF cf{Integer(a / b), {}};
    Natural r = a % b;
    while (r != 0) {
        a = b;
        b = r;
        cf.quotients.push_back(a / b);
        r = a % b;
    }
    assert(is_canonical(cf));
    return cf;
}

SignedRational eval_cf(const FiniteCF& cf) {
    validate_cf(cf);
    if (cf.quotients.empty())
        return SignedRational(cf.leading);
    // Fold the quotient tail bottom-up; q + 1/(a/b) = (q*a + b)/a stays reduced.
    Natural a = cf.quotients.back();
    Natural b = 1;
    for (std::size_t i = cf.quotients.size() - 1; i-- > 0;) {
        Natural next = cf.quotients[i] * a + b;
        b = std::exchange(a, std::move(next));
    }
    return SignedRational(cf.leading * a + b, a);
}

ConvergentIterator::ConvergentIterator(Integer leading)
    : prev_num_(1), prev_den_(0), num_(std::move(leading)), den_(1) {}

SignedRational ConvergentIterator::prev_value() const {
    if (ordinal_ == 0)
        throw std::domain_error("no convergent before c0");
    return SignedRational(prev_num_, prev_den_);
}

Convergent ConvergentIterator::current() const {
    return Convergent{ordinal_, value(), num_, den_};
}

void ConvergentIterator::advance(const Natural& quotient) {
    if (quotient < 1)
        throw std::domain_error("continued fraction quotient " +
                                std::to_string(ordinal_ + 1) + " must be >= 1");
    Integer num = quotient * num_ + prev_num_;
    Natural den = quotient * den_ + prev_den_;
    prev_num_ = std::exchange(num_, std::move(num));
    prev_den_ = std::exchange(den_, std::move(den));
    ++ordinal_;
}

std::vector<Convergent> convergents(const Integer& leading, QuotientProducer quotients,
                                    std::size_t count) {
    std::vector<Convergent> out;
    if (count == 0)
        return out;
    out.reserve(count);
    ConvergentIterator it(leading);
    out.push_back(it.current());
    while (out.size() < count) {
        std::optional<Natural> q = quotients();
        if (!q)
            throw std::domain_error("quotient stream exhausted after " +
                                    std::to_string(out.size() - 1) +
                                    " quotients; " + std::to_string(count) +
                                    " convergents need " + std::to_string(count - 1));
        it.advance(*q);
        out.push_back(it.current());
    }
    return out;
}

std::vector<Convergent> convergents(const Integer& leading,
                                    const std::vector<Natural>& quotients,
                                    std::size_t count) {
    std::size_t i = 0;
    return convergents(
        leading,
        [&]() -> std::optional<Natural> {
            if (i >= quotients.size())
                return std::nullopt;
            return quotients[i++];
        },
        count);
}

std::string render_cf(const FiniteCF& cf) {
    std::string out = "[" + cf.leading.str() + ";";
    for (std::size_t i = 0; i < cf.quotients.size(); ++i) {
        out += i == 0 ? " " : ", ";
        out += cf.quotients[i].str();
    }
    out += "]";
    return out;
}

namespace {

struct CFLexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("invalid continued fraction \"" + std::string(text) +
                         "\": " + what);
    }
    Integer integer(bool allow_sign) {
        skip_space();
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && text[pos] == '-')
            ++pos;
        std::size_t digits_from = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits_from)
            fail("expected an integer");
        return Integer(std::string(text.substr(start, pos - start)));
    }
};

}  // namespace

FiniteCF parse_cf(std::string_view text, bool lenient) {
    CFLexer lex{text};
    if (!lex.eat('['))
        lex.fail("expected '['");
    FiniteCF cf{lex.integer(true), {}};
    if (!lex.eat(';'))
        lex.fail("expected ';' after the leading term");
    if (!lex.eat(']')) {
        do {
            Integer q = lex.integer(false);
            if (q < 1)
                lex.fail("quotients must be >= 1");
            cf.quotients.emplace_back(std::move(q));
        } while (lex.eat(','));
        if (!lex.eat(']'))
            lex.fail("expected ']'");
    }
    lex.skip_space();
    if (lex.pos != text.size())
        lex.fail("trailing characters");
    if (!is_canonical(cf)) {
        if (!lenient)
            throw ParseError("invalid continued fraction \"" + std::string(text) +
                             "\": final quotient 1 is not canonical");
        // [..., q, 1] = [..., q+1]
        cf.quotients.pop_back();
        if (cf.quotients.empty())
            cf.leading += 1;
        else
            cf.quotients.back() += 1;
    }
    return cf;
}

}  // namespace ratseq
