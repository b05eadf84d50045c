/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "core/cf.hpp"
#include "core/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ratseq {

// Single-consumer cursor over the gaps g0, g1, g2, ... of a binary index,
// finite or infinite.  Every pull is validated: g0 >= 0, later gaps >= 1;
// a violation reports the failing position.
class GapStream {
  public:
    using Producer = std::function<std::optional<Natural>()>;

    explicit GapStream(Producer produce) : produce_(std::move(produce)) {}

    std::optional<Natural> next();
    std::size_t position() const { return position_; }  // gaps pulled so far

  private:
    Producer produce_;
    std::size_t position_ = 0;
};

// Recreates an independent GapStream cursor on demand.
using GapSource = std::function<GapStream()>;

// Exact bracket [lo, hi] around a real value.  Evaluation results use
// consecutive convergents, so hi - lo = 1/(q(m) q(m+1)).
struct RationalInterval {
    SignedRational lo;
    SignedRational hi;

    SignedRational width() const { return hi - lo; }
    SignedRational midpoint() const;
};

// A binary numeral extending infinitely leftward: a finite natural number,
// an eventually periodic pattern, or an on-demand gap stream.  Periodic
// numerals canonicalize to the least period and shortest suffix, making
// equality decidable and rendering deterministic.
class TwoAdicInteger {
  public:
    enum class Form { finite, periodic, stream };

    static TwoAdicInteger from_natural(Natural n);   // n >= 1
    static TwoAdicInteger from_gap_source(GapSource source);

    // Grammar: [ "(" bits ")" ] bits?, most-significant-left; "(B)S" repeats
    // block B infinitely leftward above suffix S.  All-zero numerals are
    // rejected.
    static TwoAdicInteger parse(std::string_view numeral);

    Form form() const;

    // Canonical text; stream-backed numerals have none.
    std::string render() const;

    // The exact rational whose 2-adic expansion this is; a period block B
    // of length L above a k-bit suffix contributes -2^k B / (2^L - 1).
    SignedRational rational_value() const;

    // Fresh gap cursor (finite stream for finite numerals).
    GapStream gaps() const;

    // Keep the lowest `ones_count` set bits; errors if fewer exist.
    Natural truncate(std::size_t ones_count) const;

    // Bracket the value of the extended sequence at this index: a degenerate
    // interval for finite gap sequences, otherwise two consecutive
    // convergents with width <= 2^-precision_bits.  The limit value lies
    // strictly inside.
    RationalInterval eval_real(unsigned precision_bits) const;

    // Canonical-form equality; undecidable for stream-backed numerals.
    bool equals(const TwoAdicInteger& other) const;

  private:
    // Bits are stored lowest-position-first; period repeats from position
    // suffix.size() upward and is never all-zero.
    struct Periodic {
        std::vector<bool> suffix;
        std::vector<bool> period;

        bool operator==(const Periodic&) const = default;
    };

    explicit TwoAdicInteger(std::variant<Natural, Periodic, GapSource> repr)
        : repr_(std::move(repr)) {}

    static TwoAdicInteger make_periodic(Periodic p);

    std::variant<Natural, Periodic, GapSource> repr_;
};

// |x|_2 = 1/2^k where 2^k is the exact power of two in x; k < 0 for
// rationals with an even denominator.  x must be nonzero.
PositiveRational norm2(const SignedRational& x);

// Gap stream of the classical expansion of e: g0 = 2, then 2k at
// positions 3k-1 and 1 elsewhere.
GapStream euler_e_gaps();

TwoAdicInteger sqrt2_index();      // "(01)0": the index whose value is sqrt(2)
TwoAdicInteger phi_recip_index();  // "(1)": the index of 1/phi = (sqrt(5)-1)/2
TwoAdicInteger e_index();          // stream-backed index of e

}  // namespace ratseq
