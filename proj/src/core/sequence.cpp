/* SPDX-License-Identifier: Apache-2.0 */

#include "core/sequence.hpp"

#include "core/cf.hpp"

namespace ratseq {

PositiveRational eval_index(const Natural& n) {
    if (n <= 0)
        throw std::domain_error("sequence index must be >= 1 (got " + n.str() + ")");
    PositiveRational v;  // the leading binary digit is a(1) = 1
    for (std::size_t i = boost::multiprecision::msb(n); i-- > 0;) {
        v = add_one(v);
        if (boost::multiprecision::bit_test(n, i))
            v = reciprocal(v);
    }
    return v;
}

Natural locate(const PositiveRational& q) {
    return index_from_gaps(gaps_from_cf(encode_euclid(q)));
}

SignedRational signed_enum(const Natural& n) {
    if (n <= 0)
        throw std::domain_error("sequence index must be >= 1 (got " + n.str() + ")");
    if (n == 1)
        return SignedRational();
    if (boost::multiprecision::bit_test(n, 0))
        return -SignedRational(eval_index((n - 1) / 2));
    return SignedRational(eval_index(n / 2));
}

std::vector<IndexedTerm> first_terms(std::size_t count) {
    std::vector<IndexedTerm> out;
    out.reserve(count);
    std::vector<PositiveRational> memo(count + 1);
    for (std::size_t n = 1; n <= count; ++n) {
        if (n == 1)
            memo[n] = PositiveRational();
        else if (n % 2 == 0)
            memo[n] = add_one(memo[n / 2]);
        else
            memo[n] = reciprocal(memo[n - 1]);
        out.push_back(IndexedTerm{Natural(n), memo[n]});
    }
    return out;
}

Natural parse_index_text(std::string_view text) {
    if (text.size() > 2 && text.substr(0, 2) == "0b") {
        Natural n = 0;
        for (std::size_t i = 2; i < text.size(); ++i) {
            char c = text[i];
            if (c != '0' && c != '1')
                throw ParseError("invalid binary index \"" + std::string(text) +
                                 "\": unexpected character '" + c + "'");
            n <<= 1;
            if (c == '1')
                n += 1;
        }
        return n;
    }
    if (text.empty())
        throw ParseError("empty index");
    for (char c : text) {
        if (c < '0' || c > '9')
            throw ParseError("invalid index \"" + std::string(text) +
                             "\": unexpected character '" + c + "'");
    }
    return Natural(std::string(text));
}

}  // namespace ratseq
