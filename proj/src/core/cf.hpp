/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "core/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace ratseq {

// Run-length view of a binary index: the distances between successive set
// bits.  gaps[0] is the position of the lowest set bit (>= 0); every later
// entry is the distance to the next set bit (>= 1).
struct GapSequence {
    std::vector<Natural> gaps;

    bool operator==(const GapSequence&) const = default;
};

// Finite continued fraction  leading + 1/(q1 + 1/(q2 + ... + 1/qm)).
// Canonical form requires the final quotient to be >= 2 when present;
// evaluation does not require canonicality.
struct FiniteCF {
    Integer leading;
    std::vector<Natural> quotients;

    bool operator==(const FiniteCF&) const = default;
};

void validate_gaps(const GapSequence& g);
void validate_cf(const FiniteCF& cf);
bool is_canonical(const FiniteCF& cf);

// Set-bit run lengths of n, lowest bit first.  n = 0 has no set bits.
GapSequence gaps_from_index(const Natural& n);

// Exact inverse: n = 2^g0 + 2^(g0+g1) + ... + 2^(g0+...+gk).
Natural index_from_gaps(const GapSequence& g);

// Gap sequence -> canonical CF.  A single gap (m) maps to the bare
// integer m+1; otherwise leading = g0, quotients g1..g(k-1), 1+gk.
FiniteCF cf_from_gaps(const GapSequence& g);

// Inverse of cf_from_gaps.  Requires a canonical CF with leading >= 0
// denoting a strictly positive value.
GapSequence gaps_from_cf(const FiniteCF& cf);

// Continued fraction of a positive rational by repeated floor-and-remainder.
// The result is canonical by construction (Euclidean division never leaves
// a trailing quotient of 1).
FiniteCF encode_euclid(const PositiveRational& q);

// Exact bottom-up evaluation.
SignedRational eval_cf(const FiniteCF& cf);

// One rational approximant p/q of a continued fraction prefix.
// Consecutive convergents satisfy |p(m) q(m-1) - p(m-1) q(m)| = 1.
struct Convergent {
    std::size_t ordinal;
    SignedRational value;
    Integer num;
    Natural den;
};

// Incremental two-term recurrence over the quotients of a continued
// fraction.  Starts at c0 = leading/1.
class ConvergentIterator {
  public:
    explicit ConvergentIterator(Integer leading);

    std::size_t ordinal() const { return ordinal_; }
    const Integer& num() const { return num_; }
    const Natural& den() const { return den_; }
    const Integer& prev_num() const { return prev_num_; }
    const Natural& prev_den() const { return prev_den_; }

    SignedRational value() const { return SignedRational(num_, den_); }
    SignedRational prev_value() const;
    Convergent current() const;

    void advance(const Natural& quotient);  // quotient >= 1

  private:
    std::size_t ordinal_ = 0;
    Integer prev_num_;  // p(m-1), initialized to p(-1) = 1
    Natural prev_den_;  // q(m-1), initialized to q(-1) = 0
    Integer num_;
    Natural den_;
};

using QuotientProducer = std::function<std::optional<Natural>()>;

// First `count` convergents c0..c(count-1).  The producer must yield at
// least count-1 quotients; exhaustion earlier is an error naming the
// shortfall.
std::vector<Convergent> convergents(const Integer& leading, QuotientProducer quotients,
                                    std::size_t count);
std::vector<Convergent> convergents(const Integer& leading,
                                    const std::vector<Natural>& quotients,
                                    std::size_t count);

// Text format "[z; q1, q2, ..., qm]", "[z;]" for bare integers.  A final
// quotient of 1 is rejected unless `lenient`, in which case it is folded
// into the previous quotient.
std::string render_cf(const FiniteCF& cf);
FiniteCF parse_cf(std::string_view text, bool lenient = false);

}  // namespace ratseq
