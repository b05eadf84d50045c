/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "core/rational.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace ratseq {

// The enumeration under study: a(1) = 1, a(2n) = a(n) + 1,
// a(2n+1) = 1/a(2n).  It visits every positive rational exactly once.

struct IndexedTerm {
    Natural index;
    PositiveRational value;
};

// a(n) by scanning the binary digits of n most-significant-first: each
// appended digit doubles the index (add one), a one digit then takes the
// reciprocal.  Iterative, so the input size is not bounded by stack depth.
PositiveRational eval_index(const Natural& n);

// The unique n with a(n) = q, through the continued-fraction codec.
Natural locate(const PositiveRational& q);

// Signed enumeration covering all of Q: s(1) = 0, s(2n) = a(n),
// s(2n+1) = -a(n).
SignedRational signed_enum(const Natural& n);

// Terms 1..count in order.
std::vector<IndexedTerm> first_terms(std::size_t count);

// Index text: decimal digits, or binary with a "0b" prefix.
Natural parse_index_text(std::string_view text);

}  // namespace ratseq
