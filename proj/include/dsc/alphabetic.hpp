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
#include <span>
#include <vector>

#include "dsc/bitio.hpp"
#include "dsc/partial_sums.hpp"
#include "dsc/static_codes.hpp"

namespace dsc {

/// f(a) = F / (2D) with D = m + n and F = (#a + 1) + 2 Σ_{b<a} (#b + 1);
/// the codeword of a is the first ceil(log2(D / (#a + 1))) + 1 bits of f(a).
struct MehlhornPoint {
    std::uint64_t numerator;    // F
    std::uint64_t denominator;  // 2D
    unsigned length;
};

/// `below` is Σ_{b<a} #b, the frequency mass strictly before a.
MehlhornPoint mehlhorn_point(std::uint64_t count, std::uint64_t below, Symbol a, std::uint64_t m,
                             std::uint32_t n);

/// Codeword of `a` under the counts (index = symbol, n = counts.size()).
BitString mehlhorn_codeword(std::span<const std::uint64_t> counts, Symbol a);
/// All n codewords for one context, by direct summation.
std::vector<BitString> mehlhorn_code(std::span<const std::uint64_t> counts);

/// Alphabetic dynamic Shannon coding: each step emits only the codeword of
/// the current character, with the needed partial sum from an AlphaSumTree.
class AlphabeticCoder {
public:
    explicit AlphabeticCoder(std::uint32_t alphabet_size);

    BitString encode(Symbol s);
    void encode(Symbol s, BitWriter& out);
    Symbol decode(BitReader& src);

    std::uint32_t alphabet_size() const { return n_; }
    std::uint64_t position() const { return position_; }
    /// Length of the codeword the next character `s` would receive.
    unsigned length_for(Symbol s);
    /// The codeword `s` would receive next, without advancing.
    BitString codeword_for(Symbol s);
    std::uint64_t node_touches() const { return sums_.tree().touches(); }
    AlphaSumTree& sums() { return sums_; }

private:
    MehlhornPoint point(Symbol s);

    std::uint32_t n_;
    std::uint64_t position_ = 1;
    AlphaSumTree sums_;
};

}  // namespace dsc
