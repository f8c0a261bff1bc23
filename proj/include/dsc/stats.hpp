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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dsc/static_codes.hpp"

namespace dsc {

/// Order-0 empirical entropy in bits per character; 0 for the empty string.
long double empirical_entropy(const FrequencyTable& f);
long double empirical_entropy(std::span<const Symbol> text, std::uint32_t alphabet_size);

/// log2(x!).
long double log2_factorial(std::uint64_t x);

/// Σ_a #a ceil(log2(m / #a)).
std::uint64_t static_shannon_bound(const FrequencyTable& f);

/// Terms of the repetition-sum chain
///   L = Σ_{i∈R} log(i / #_{s_i}(s_1..s_{i-1}))
///     <= log m! - Σ log #a! + Σ log #a
///     <= H m + Σ log #a.
struct Lemma1Chain {
    long double lhs = 0;               // L
    long double sum_log_positions = 0; // Σ_{i∈R} log i
    long double log_m_factorial = 0;   // log m!
    long double sum_log_previous = 0;  // Σ_{i∈R} log #_{s_i}(s_1..s_{i-1})
    long double sum_log_factorials = 0;// Σ_a log #a!
    long double sum_log_counts = 0;    // Σ_a log #a
    long double factorial_form = 0;    // log m! - Σ log #a! + Σ log #a
    long double multinomial = 0;       // log m! - Σ log #a!
    long double entropy_m = 0;         // H m
    long double entropy_form = 0;      // H m + Σ log #a
    bool holds = false;
};
Lemma1Chain lemma1_sides(std::span<const Symbol> text, std::uint32_t alphabet_size);

/// Σ_{i∈R} log((i + n)/#) against Σ_{i∈R} log(i/#) + n log(max R + n).
struct SlackSides {
    long double lhs = 0;
    long double base = 0;       // Σ_{i∈R} log(i/#)
    long double slack_term = 0; // n log(max R + n)
    long double rhs = 0;
    bool holds = false;
};
SlackSides slack_sides(std::span<const Symbol> text, std::uint32_t alphabet_size, std::uint64_t n);

enum class TheoremId { SimpleDynamic, Dynamic, LengthRestricted, Alphabetic, UnequalCost };

struct TheoremParams {
    std::uint32_t alphabet_size = 256;
    unsigned ell = 1;
    bool distinct_mode = false;
    double cost0 = 1.0;
    double cost1 = 1.0;
};

/// Three levels of the bound for one theorem on one input:
///   steps:   the per-character codeword guarantee summed over S;
///   proof:   the first real-valued expression the proof derives from it;
///   entropy: the (H + 1) m form with the O(.) term written out.
/// For the unequal-cost theorem every value is a cost rather than a bit count,
/// and `steps` equals `proof`.
struct TheoremBound {
    long double steps = 0;
    long double proof = 0;
    long double entropy = 0;
};
TheoremBound theorem_rhs(TheoremId id, std::span<const Symbol> text, const TheoremParams& params);
TheoremId theorem_for(const std::string& algorithm);

/// Per-character guarantees used by theorem_rhs, exposed for step-wise checks.
/// `i` is the 1-based position, `count` the occurrences of s_i in s_1..s_{i-1}
/// (0 for a first occurrence), `distinct` the distinct symbols in s_1..s_{i-1}.
long double step_bound(TheoremId id, std::uint64_t i, std::uint64_t count, std::uint64_t distinct,
                       const TheoremParams& params);

struct BoundReport {
    std::string algorithm;
    std::uint64_t m = 0;
    std::uint32_t n = 0;
    long double entropy = 0;
    long double measured = 0;
    long double bound = 0;
    bool pass = false;
    std::uint64_t ops = 0;
};

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BoundReport& r);

}  // namespace dsc
