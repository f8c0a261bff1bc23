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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "dsc/codec.hpp"
#include "dsc/stats.hpp"

namespace dsc {

/// Test inputs. Each generator is deterministic in its seed.
std::vector<Symbol> uniform_text(std::uint64_t m, std::uint32_t n, std::uint64_t seed);
/// P(rank k) proportional to 1 / k^s over a seeded random permutation of the alphabet.
std::vector<Symbol> zipf_text(std::uint64_t m, std::uint32_t n, double s, std::uint64_t seed);
std::vector<Symbol> single_symbol_text(std::uint64_t m, Symbol a);
/// Every symbol of the alphabet once, in seeded random order.
std::vector<Symbol> all_distinct_text(std::uint32_t n, std::uint64_t seed);

struct VerifyOptions {
    unsigned ell = 1;
    bool distinct_mode = false;
    double cost0 = 1.0;
    double cost1 = 2.0;
};

/// Encodes `text` with every algorithm, checks the roundtrip and compares the
/// measured size (cost for unequal letter costs) with the algorithm's bound:
/// Σ #a ceil(log(m/#a)) for the static codes, the entropy form of the
/// theorem for the dynamic ones. A failed roundtrip clears `pass`.
std::vector<BoundReport> verify_text(std::span<const Symbol> text, std::uint32_t alphabet_size,
                                     const VerifyOptions& options);

struct NamedText {
    std::string name;
    std::uint32_t alphabet_size;
    std::vector<Symbol> text;
};

/// Synthetic inputs: uniform, Zipf(1.2), single-symbol and all-distinct bytes.
std::vector<NamedText> synthetic_corpus();
/// Regular files under `dir` as byte strings, sorted by path.
std::vector<NamedText> load_corpus(const std::filesystem::path& dir);
std::vector<Symbol> read_bytes(const std::filesystem::path& file);

}  // namespace dsc
