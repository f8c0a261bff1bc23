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

#include <cstdint>

#include "dsc/dynamic_shannon.hpp"

namespace dsc {

struct RestrictedParams {
    unsigned ell = 1;            // extra length allowed beyond ceil(log2 n), 1..32
    bool distinct_mode = false;  // use 2(n_i + 1) in place of n, n_i = distinct symbols seen
};

/// Smoothed weight for x = num/den >= 1:
///   -ceil(log2(2^ell / ((2^ell - 1)/x + 1/n))),
/// never below -(ceil(log2 n) + ell). Exact integer arithmetic.
Weight smooth_weight(std::uint64_t num, std::uint64_t den, unsigned ell, std::uint64_t n);

struct SmoothRule {
    RestrictedParams params;

    Weight weight(std::uint64_t numerator, std::uint64_t count, std::uint64_t slack) const {
        return smooth_weight(numerator, count, params.ell, slack);
    }
    std::uint64_t slack(std::uint32_t alphabet_size, std::uint32_t distinct) const {
        return params.distinct_mode ? 2 * (static_cast<std::uint64_t>(distinct) + 1) : alphabet_size;
    }
    bool drops_escape() const { return true; }
};

/// Dynamic Shannon coding with every codeword capped at ceil(log2 n) + ell
/// bits (first occurrences at 2 ceil(log2 n) + ell). The escape leaf is
/// dropped right after the update for the character that completes the alphabet.
class LengthRestrictedCoder : public DynamicMinimaxCoder<SmoothRule> {
public:
    LengthRestrictedCoder(std::uint32_t alphabet_size, RestrictedParams params);

    /// Hard cap on the codeword of a repeated character.
    unsigned repeat_cap() const;
};

extern template class DynamicMinimaxCoder<SmoothRule>;

}  // namespace dsc
