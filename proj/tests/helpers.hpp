/* SPDX-License-Identifier: Apache-2.0 */

// Test-only oracles and generators.  Everything here is deliberately
// independent of the library code paths it is used to check.

#pragma once

#include "core/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ratseq::testing {

// The sequence by its definition: a(1) = 1, a(2n) = a(n) + 1,
// a(2n+1) = 1/a(2n), memoized bottom-up.  Index 0 of the result is unused.
inline std::vector<PositiveRational> recursion_oracle(std::size_t count) {
    std::vector<PositiveRational> a(count + 1);
    for (std::size_t n = 2; n <= count; ++n) {
        if (n % 2 == 0)
            a[n] = PositiveRational(a[n / 2].num() + a[n / 2].den(), a[n / 2].den());
        else
            a[n] = PositiveRational(a[n - 1].den(), a[n - 1].num());
    }
    return a;
}

// F(1) = F(2) = 1.
inline Natural fibonacci(std::size_t n) {
    Natural a = 0, b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Natural next = a + b;
        a = b;
        b = next;
    }
    return a;
}

// Lower bound of e by the factorial series, sum_{k=0..terms} 1/k!.
// The truncation error is below 2/(terms+1)!.
inline SignedRational e_series_oracle(unsigned terms) {
    Natural factorial = 1;
    SignedRational sum;
    for (unsigned k = 0; k <= terms; ++k) {
        if (k > 0)
            factorial *= k;
        sum = sum + SignedRational(Integer(1), Integer(factorial));
    }
    return sum;
}

inline Natural random_natural(std::mt19937_64& rng, unsigned bits) {
    Natural n = 0;
    for (unsigned filled = 0; filled < bits; filled += 64) {
        n <<= 64;
        n += rng();
    }
    return n & ((Natural(1) << bits) - 1);
}

inline Natural random_natural_nonzero(std::mt19937_64& rng, unsigned bits) {
    return random_natural(rng, bits) + 1;
}

inline SignedRational pow2(long exponent) {
    if (exponent >= 0)
        return SignedRational(Integer(1) << exponent);
    return SignedRational(Integer(1), Integer(1) << -exponent);
}

// "(B)S" with a random non-zero block of <= 8 bits over a random suffix of
// <= 16 bits.
inline std::string random_periodic_numeral(std::mt19937_64& rng) {
    std::size_t period_len = 1 + rng() % 8;
    std::size_t suffix_len = rng() % 17;
    std::string text;
    while (true) {
        std::string block;
        for (std::size_t i = 0; i < period_len; ++i)
            block += (rng() & 1) ? '1' : '0';
        if (block.find('1') == std::string::npos)
            continue;
        text = "(" + block + ")";
        break;
    }
    for (std::size_t i = 0; i < suffix_len; ++i)
        text += (rng() & 1) ? '1' : '0';
    return text;
}

}  // namespace ratseq::testing
