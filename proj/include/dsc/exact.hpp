/*
Copyright 2026 The dynshannon Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

// Exact integer helpers for ceilinged base-2 logarithms of rationals.

#include <bit>
#include <cstdint>

#include "dsc/errors.hpp"

namespace dsc {

using u128 = unsigned __int128;

// ceil(log2(x)) for x >= 1.
constexpr int ceil_log2(std::uint64_t x) {
    if (x == 0) {
        throw InvalidArgument("ceil_log2 of zero");
    }
    return x == 1 ? 0 : static_cast<int>(std::bit_width(x - 1));
}

constexpr int bit_width128(u128 x) {
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    if (hi != 0) {
        return 64 + static_cast<int>(std::bit_width(hi));
    }
    return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(x)));
}

// Smallest integer k with 2^k >= num/den. Both operands must be positive.
constexpr int ceil_log2_ratio(u128 num, u128 den) {
    if (num == 0 || den == 0) {
        throw InvalidArgument("ceil_log2_ratio needs positive operands");
    }
    if (num <= den) {
        // Largest j >= 0 with num * 2^j <= den, negated.
        int j = bit_width128(den) - bit_width128(num);
        while (j > 0 && (num << j) > den) {
            --j;
        }
        return -j;
    }
    // Smallest k with den * 2^k >= num; den << k0 has the bit width of num.
    const int k0 = bit_width128(num) - bit_width128(den);
    return (den << k0) >= num ? k0 : k0 + 1;
}

}  // namespace dsc
