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

// The simple dynamic framework: before each character, rebuild a static
// code over the escape-prefixed history and encode with it. First
// occurrences are sent as the escape codeword followed by the symbol index.

#include <cstdint>
#include <vector>

#include "dsc/bitio.hpp"
#include "dsc/static_codes.hpp"

namespace dsc {

/// The history a static code is rebuilt from: every symbol seen so far plus
/// escape (count 1), total = position i.
struct EscapeContext {
    std::span<const Label> labels;           // ascending, escape last
    std::span<const std::uint64_t> counts;   // parallel to labels
    std::uint64_t total;
};

/// A length rule fills `out` for the context and returns false if it left
/// `out` as it was.

/// Lengths from Shannon's algorithm: Golumbic tree depths on weights -ceil(log(total/count)).
struct ShannonLengths {
    bool operator()(const EscapeContext& ctx, std::vector<CodeLength>& out);
    MinimaxTree tree;
    std::vector<WeightedLabel> scratch;
    std::vector<WeightedLabel> previous;
};

/// Lengths from Huffman's algorithm on the same context.
struct HuffmanLengths {
    bool operator()(const EscapeContext& ctx, std::vector<CodeLength>& out);
};

template <typename LengthRule>
class SimpleDynamicCoder {
public:
    explicit SimpleDynamicCoder(std::uint32_t alphabet_size);

    BitString encode(Symbol s);
    void encode(Symbol s, BitWriter& out);
    Symbol decode(BitReader& src);

    std::uint32_t alphabet_size() const { return n_; }
    /// 1-based index of the next character.
    std::uint64_t position() const { return position_; }
    std::uint64_t count(Symbol s) const { return s < n_ ? counts_[s] : 1; }
    /// Codeword length the current context assigns to `label`, or -1 if unassigned.
    int current_length(Label label);
    std::uint64_t state_hash() const;

private:
    void rebuild_code();
    void update(Symbol s);

    std::uint32_t n_;
    unsigned index_width_;
    std::uint64_t position_ = 1;
    std::vector<std::uint64_t> counts_;
    std::vector<Label> labels_{kEscape};
    std::vector<std::uint64_t> label_counts_{1};
    std::vector<CodeLength> lengths_;
    CanonicalCode code_;
    bool code_valid_ = false;
    LengthRule rule_;
};

using SimpleDynamicShannon = SimpleDynamicCoder<ShannonLengths>;
using SimpleDynamicHuffman = SimpleDynamicCoder<HuffmanLengths>;

extern template class SimpleDynamicCoder<ShannonLengths>;
extern template class SimpleDynamicCoder<HuffmanLengths>;

}  // namespace dsc
