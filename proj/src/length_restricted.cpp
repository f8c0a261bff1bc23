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
#include "dsc/length_restricted.hpp"

#include "dynamic_minimax_coder.ipp"

namespace dsc {

Weight smooth_weight(std::uint64_t num, std::uint64_t den, unsigned ell, std::uint64_t n) {
    if (den == 0 || num < den) {
        throw InvalidArgument("smooth_weight needs x >= 1");
    }
    if (ell < 1 || ell > 32) {
        throw InvalidArgument("ell must be in [1, 32]");
    }
    if (n == 0) {
        throw InvalidArgument("smooth_weight needs n >= 1");
    }
    if (ell + std::bit_width(num) + std::bit_width(n) > 126 ||
        ell + std::bit_width(den) + std::bit_width(n) > 125) {
        throw InvalidArgument("smooth_weight operands too large");
    }
    // 2^ell / ((2^ell - 1) den / num + 1/n) = 2^ell num n / ((2^ell - 1) den n + num)
    const u128 p = u128{1} << ell;
    const u128 top = p * num * n;
    const u128 bottom = (p - 1) * den * n + num;
    return -ceil_log2_ratio(top, bottom);
}

template class DynamicMinimaxCoder<SmoothRule>;

LengthRestrictedCoder::LengthRestrictedCoder(std::uint32_t alphabet_size, RestrictedParams params)
    : DynamicMinimaxCoder<SmoothRule>(alphabet_size, SmoothRule{params}) {}

unsigned LengthRestrictedCoder::repeat_cap() const {
    const auto& p = rule().params;
    if (p.distinct_mode) {
        return static_cast<unsigned>(ceil_log2(distinct() + 1)) + p.ell + 1;
    }
    return static_cast<unsigned>(ceil_log2(alphabet_size())) + p.ell;
}

}  // namespace dsc
