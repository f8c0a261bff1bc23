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
#include <map>
#include <span>
#include <vector>

#include "dsc/bitio.hpp"
#include "dsc/minimax.hpp"

namespace dsc {

using Symbol = std::uint32_t;

/// Occurrence counts of each alphabet symbol over a string.
struct FrequencyTable {
    std::uint32_t alphabet_size = 0;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;

    static FrequencyTable of(std::span<const Symbol> text, std::uint32_t alphabet_size);
    std::uint32_t distinct() const;
};

/// Symbol -> codeword. Ordered by symbol.
using CodeAssignment = std::map<Symbol, BitString>;

struct CodeLength {
    Label label;
    unsigned length;
};

/// ceil(log2(m / count)) computed exactly.
unsigned shannon_length(std::uint64_t m, std::uint64_t count);

/// Shannon lengths for every symbol with a nonzero count, ascending by symbol.
std::vector<CodeLength> shannon_lengths(const FrequencyTable& f);
/// Code-tree from Golumbic's algorithm on weights -shannon_length.
CodeAssignment shannon_code(const FrequencyTable& f);

/// Huffman depths for the counted symbols. Equal weights merge earlier-created
/// roots first; leaves are created in ascending symbol order.
std::vector<CodeLength> huffman_lengths(const FrequencyTable& f);
CodeAssignment huffman_code(const FrequencyTable& f);

/// Canonical prefix-free code: entries sorted by (length, label) receive
/// lexicographically increasing codewords.
class CanonicalCode {
public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::span<const CodeLength> lengths) { assign(lengths); }

    /// Throws InvalidArgument if lengths exceed 64 or violate Kraft.
    void assign(std::span<const CodeLength> lengths);

    std::size_t size() const { return sorted_.size(); }
    bool contains(Label label) const;
    unsigned length(Label label) const;
    BitString codeword(Label label) const;
    void write(Label label, BitWriter& out) const;
    /// Throws CorruptData for a bit pattern that is no codeword.
    Label decode(BitReader& src) const;

private:
    struct Entry {
        Label label;
        unsigned length;
        std::uint64_t code;
    };
    const Entry& entry(Label label) const;

    std::vector<Entry> by_label_;
    std::vector<Label> sorted_;  // by (length, label)
    std::vector<std::uint32_t> count_;
    std::vector<std::uint32_t> offset_;
    std::vector<u128> first_;
    unsigned max_length_ = 0;
};

enum class StaticAlgorithm { Shannon, Huffman };

struct StaticEncoding {
    BitString preface;
    BitString body;
};

/// Code lengths (tree depths) the static algorithm assigns to `f`.
std::vector<CodeLength> static_lengths(const FrequencyTable& f, StaticAlgorithm algo);

/// Preface: alphabet size (32 bits), distinct count (32 bits), then per
/// distinct symbol in ascending order its index and its codeword length (8 bits).
void write_preface(BitWriter& out, std::uint32_t alphabet_size, std::span<const CodeLength> lengths);
struct Preface {
    std::uint32_t alphabet_size = 0;
    std::vector<CodeLength> lengths;
};
Preface read_preface(BitReader& in);

StaticEncoding encode_static(std::span<const Symbol> text, std::uint32_t alphabet_size,
                             StaticAlgorithm algo);
/// The message length m comes from outside: a one-symbol code has empty codewords.
std::vector<Symbol> decode_static(const BitString& preface, const BitString& body, std::uint64_t m);

}  // namespace dsc
