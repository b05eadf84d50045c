/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "core/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ratseq {

// Binary tree enumerating the rationals in (0,1): root 1/2, rule
// x/y -> { x/(x+y), y/(x+y) }.  Breadth-first it matches the odd-index
// subsequence a(3), a(5), a(7), ...

struct KeplerNode {
    Natural index;  // odd, >= 3
    PositiveRational value;
    unsigned depth;
};

KeplerNode kepler_root();

// Parent index 2n+1 propagates to 4n+1 (left) and 4n+3 (right).
std::pair<KeplerNode, KeplerNode> kepler_children(const KeplerNode& node);

// The 2^d nodes of depth d, left to right.
std::vector<KeplerNode> kepler_level(unsigned depth);

// Values down the right edge: a(2^n - 1) for n = 2..count+1, the ratios
// of successive Fibonacci numbers starting 1/2.
std::vector<PositiveRational> kepler_right_edge(std::size_t count);

// GraphViz text for the tree through max_depth; node names "n<index>",
// labels "a_<index> = p/q", left edge emitted before right.
std::string kepler_to_dot(unsigned max_depth);

// Nested objects with fields index, value, children.
std::string kepler_to_json(unsigned max_depth);

// Indented one-node-per-line rendering, children below their parent.
std::string kepler_to_text(unsigned max_depth);

}  // namespace ratseq
