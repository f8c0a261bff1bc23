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
#include "dsc/alphabetic.hpp"

#include "dsc/exact.hpp"

namespace dsc {

namespace {
constexpr unsigned kMaxCodewordBits = 64;
}

MehlhornPoint mehlhorn_point(std::uint64_t count, std::uint64_t below, Symbol a, std::uint64_t m,
                             std::uint32_t n) {
    if (n < 2) {
        throw InvalidArgument("alphabetic coding needs n >= 2");
    }
    if (a >= n) {
        throw InvalidArgument("symbol outside the alphabet");
    }
    const std::uint64_t d = m + n;
    const std::uint64_t f = count + 1 + 2 * (below + a);
    if (f >= 2 * d) {
        throw InvalidArgument("inconsistent counts for the Mehlhorn point");
    }
    const int len = ceil_log2_ratio(d, count + 1) + 1;
    return {f, 2 * d, static_cast<unsigned>(len)};
}

BitString mehlhorn_codeword(std::span<const std::uint64_t> counts, Symbol a) {
    const auto n = static_cast<std::uint32_t>(counts.size());
    std::uint64_t m = 0;
    std::uint64_t below = 0;
    for (std::uint32_t b = 0; b < n; ++b) {
        m += counts[b];
        if (b < a) {
            below += counts[b];
        }
    }
    const auto p = mehlhorn_point(a < n ? counts[a] : 0, below, a, m, n);
    return fraction_prefix(p.numerator, p.denominator, p.length);
}

std::vector<BitString> mehlhorn_code(std::span<const std::uint64_t> counts) {
    const auto n = static_cast<std::uint32_t>(counts.size());
    std::uint64_t m = 0;
    for (auto c : counts) {
        m += c;
    }
    std::vector<BitString> out;
    out.reserve(n);
    std::uint64_t below = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
        const auto p = mehlhorn_point(counts[a], below, a, m, n);
        out.push_back(fraction_prefix(p.numerator, p.denominator, p.length));
        below += counts[a];
    }
    return out;
}

AlphabeticCoder::AlphabeticCoder(std::uint32_t alphabet_size) : n_(alphabet_size) {
    if (n_ < 2) {
        throw InvalidArgument("alphabetic coding needs n >= 2");
    }
}

MehlhornPoint AlphabeticCoder::point(Symbol s) {
    if (s >= n_) {
        throw InvalidArgument("symbol outside the alphabet");
    }
    const auto c = sums_.frequency(s);
    const auto below = sums_.prefix_sum(s);
    return mehlhorn_point(c, below, s, position_ - 1, n_);
}

unsigned AlphabeticCoder::length_for(Symbol s) { return point(s).length; }

BitString AlphabeticCoder::codeword_for(Symbol s) {
    const auto p = point(s);
    return fraction_prefix(p.numerator, p.denominator, p.length);
}

BitString AlphabeticCoder::encode(Symbol s) {
    BitString out = codeword_for(s);
    sums_.insert_or_increment(s);
    ++position_;
    return out;
}

void AlphabeticCoder::encode(Symbol s, BitWriter& out) { out.write(encode(s)); }

Symbol AlphabeticCoder::decode(BitReader& src) {
    const std::uint64_t d = position_ - 1 + n_;
    const u128 den = u128{2} * d;
    std::uint64_t x = 0;
    for (unsigned k = 1; k <= kMaxCodewordBits; ++k) {
        x = (x << 1) | (src.read_bit() ? 1U : 0U);
        // Smallest symbol a with f(a) >= x / 2^k, i.e. F(a) >= ceil(x * 2D / 2^k).
        const u128 scaled = u128{x} * den;
        const u128 t = (scaled + (u128{1} << k) - 1) >> k;
        auto pred = [t](std::uint32_t key, std::uint64_t before, std::uint64_t freq) {
            return u128{freq} + 1 + 2 * (u128{before} + key) >= t;
        };
        const auto hit = sums_.tree().search(pred);
        // Symbols between the two present neighbours are absent (count 0).
        const std::uint64_t gap_mass = hit.prev.found ? hit.prev.before + hit.prev.freq : 0;
        const std::uint64_t gap_lo = hit.prev.found ? std::uint64_t{hit.prev.key} + 1 : 0;
        const std::uint64_t gap_hi = hit.first.found ? hit.first.key : n_;
        std::uint64_t gap_a = gap_lo;
        const u128 base = u128{2} * gap_mass + 1;
        if (base + 2 * u128{gap_lo} < t) {
            gap_a = static_cast<std::uint64_t>((t - base + 1) / 2);
        }
        Symbol a;
        std::uint64_t count;
        std::uint64_t below;
        if (gap_a < gap_hi) {
            a = static_cast<Symbol>(gap_a);
            count = 0;
            below = gap_mass;
        } else if (hit.first.found) {
            a = hit.first.key;
            count = hit.first.freq;
            below = hit.first.before;
        } else {
            throw CorruptData("bit pattern matches no alphabetic codeword");
        }
        const auto p = mehlhorn_point(count, below, a, position_ - 1, n_);
        if ((u128{p.numerator} << k) >= (u128{x} + 1) * den) {
            throw CorruptData("bit pattern matches no alphabetic codeword");
        }
        if (p.length == k) {
            sums_.insert_or_increment(a);
            ++position_;
            return a;
        }
        if (p.length < k) {
            throw CorruptData("bit pattern matches no alphabetic codeword");
        }
    }
    throw CorruptData("alphabetic codeword too long");
}

}  // namespace dsc
