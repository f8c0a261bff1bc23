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
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsc/static_codes.hpp"

namespace dsc {

enum class Algorithm : std::uint8_t {
    StaticShannon = 1,
    StaticHuffman = 2,
    SimpleDynamicShannon = 3,
    DynamicShannon = 4,
    LengthRestricted = 5,
    Alphabetic = 6,
    UnequalCost = 7,
};

const std::vector<Algorithm>& all_algorithms();
std::string algorithm_name(Algorithm a);
/// Throws InvalidArgument for an unknown name.
Algorithm algorithm_from_name(const std::string& name);

struct CodecParams {
    Algorithm algorithm = Algorithm::DynamicShannon;
    std::uint32_t alphabet_size = 256;
    unsigned ell = 1;
    bool distinct_mode = false;
    double cost0 = 1.0;
    double cost1 = 1.0;
};

/// 35 bytes, big-endian: "DSC1", algorithm, n (u32), m (u64), ell (u16, top
/// bit = distinct mode), cost0 and cost1 (IEEE doubles). Unused fields are zero.
struct ContainerHeader {
    static constexpr std::size_t kSize = 35;

    CodecParams params;
    std::uint64_t length = 0;

    std::vector<std::uint8_t> serialize() const;
    /// Throws CorruptData for bad magic, unknown algorithm or invalid fields.
    static ContainerHeader parse(std::span<const std::uint8_t> bytes);
};

/// Throws InvalidArgument if the parameters cannot be used for `algorithm`.
void validate(const CodecParams& p);

struct EncodeStats {
    std::uint64_t preface_bits = 0;
    std::uint64_t body_bits = 0;
    /// Letter cost of the body (equals body_bits except for unequal costs).
    long double body_cost = 0;
    std::uint64_t ops = 0;
    std::uint64_t max_codeword_bits = 0;
};

/// Writes the whole container for `text`.
EncodeStats encode_container(std::span<const Symbol> text, const CodecParams& params, std::ostream& out);
std::vector<std::uint8_t> encode_container(std::span<const Symbol> text, const CodecParams& params,
                                           EncodeStats* stats = nullptr);

struct DecodeLimits {
    std::uint64_t max_symbols = std::uint64_t{1} << 40;
};

/// Streams decoded symbols into `sink` as soon as each is known.
ContainerHeader decode_container(std::istream& in, const std::function<void(Symbol)>& sink,
                                 const DecodeLimits& limits = {});
std::vector<Symbol> decode_container(std::span<const std::uint8_t> bytes, const DecodeLimits& limits = {},
                                     ContainerHeader* header = nullptr);

}  // namespace dsc
