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

// Brute-force reference computations shared by the tests.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "dsc/bitio.hpp"
#include "dsc/static_codes.hpp"

namespace oracle {

// Minimum over all full binary trees with these leaves of max(w_i + depth_i):
// split the leaf set into two nonempty halves in every way.
inline int minimax(const std::vector<int>& w) {
    const std::size_t k = w.size();
    std::vector<int> best(std::size_t{1} << k, std::numeric_limits<int>::max());
    for (std::size_t mask = 1; mask < best.size(); ++mask) {
        if ((mask & (mask - 1)) == 0) {
            best[mask] = w[static_cast<std::size_t>(__builtin_ctzll(mask))];
            continue;
        }
        // Enumerate submasks containing the lowest set bit to avoid repeats.
        const std::size_t low = mask & (~mask + 1);
        for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
            if ((sub & low) == 0) {
                continue;
            }
            best[mask] = std::min(best[mask], std::max(best[sub], best[mask ^ sub]) + 1);
        }
    }
    return best.back();
}

// Minimum of Σ c_i depth_i over all full binary trees with these leaves.
inline std::uint64_t optimal_prefix_cost(const std::vector<std::uint64_t>& c) {
    const std::size_t k = c.size();
    if (k <= 1) {
        return 0;
    }
    std::vector<std::uint64_t> sum(std::size_t{1} << k, 0);
    std::vector<std::uint64_t> best(std::size_t{1} << k, std::numeric_limits<std::uint64_t>::max());
    for (std::size_t mask = 1; mask < best.size(); ++mask) {
        const std::size_t lowbit = static_cast<std::size_t>(__builtin_ctzll(mask));
        sum[mask] = sum[mask & (mask - 1)] + c[lowbit];
        if ((mask & (mask - 1)) == 0) {
            best[mask] = 0;
            continue;
        }
        const std::size_t low = mask & (~mask + 1);
        for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
            if ((sub & low) == 0) {
                continue;
            }
            best[mask] = std::min(best[mask], best[sub] + best[mask ^ sub] + sum[mask]);
        }
    }
    return best.back();
}

inline bool prefix_free(const std::vector<dsc::BitString>& words) {
    for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = 0; b < words.size(); ++b) {
            if (a != b && words[a].is_prefix_of(words[b])) {
                return false;
            }
        }
    }
    return true;
}

// Plain string of bits for a codeword built character by character.
inline std::string bits_of(const dsc::BitString& b) { return b.to_string(); }

// Text over a small alphabet from a string of letters 'a', 'b', ...
inline std::vector<dsc::Symbol> letters(const std::string& s) {
    std::vector<dsc::Symbol> out;
    for (char ch : s) {
        out.push_back(static_cast<dsc::Symbol>(ch - 'a'));
    }
    return out;
}

// ceil(log2(p/q)) by repeated doubling.
inline int ceil_log2_ratio(std::uint64_t p, std::uint64_t q) {
    int k = 0;
    if (p > q) {
        unsigned __int128 v = q;
        while (v < p) {
            v *= 2;
            ++k;
        }
        return k;
    }
    unsigned __int128 v = p;
    while (v * 2 <= q) {
        v *= 2;
        --k;
    }
    return k;
}

// First `len` bits of num/den in binary, by long division.
inline dsc::BitString fraction_bits(std::uint64_t num, std::uint64_t den, std::size_t len) {
    dsc::BitString out;
    unsigned __int128 r = num % den;
    for (std::size_t k = 0; k < len; ++k) {
        r *= 2;
        out.push_back(r >= den);
        if (r >= den) {
            r -= den;
        }
    }
    return out;
}

// Unsigned integer of unbounded size, only what exact product comparisons need.
class BigUint {
public:
    BigUint() : words_{1} {}

    BigUint& operator*=(std::uint32_t x) {
        std::uint64_t carry = 0;
        for (auto& w : words_) {
            const std::uint64_t t = static_cast<std::uint64_t>(w) * x + carry;
            w = static_cast<std::uint32_t>(t);
            carry = t >> 32;
        }
        if (carry != 0) {
            words_.push_back(static_cast<std::uint32_t>(carry));
        }
        trim();
        return *this;
    }

    friend bool operator<=(const BigUint& a, const BigUint& b) {
        if (a.words_.size() != b.words_.size()) {
            return a.words_.size() < b.words_.size();
        }
        for (std::size_t k = a.words_.size(); k-- > 0;) {
            if (a.words_[k] != b.words_[k]) {
                return a.words_[k] < b.words_[k];
            }
        }
        return true;
    }

private:
    void trim() {
        while (words_.size() > 1 && words_.back() == 0) {
            words_.pop_back();
        }
    }
    std::vector<std::uint32_t> words_;
};

// Product of many nonzero factors below 2^32, batched into 32-bit multipliers.
class Product {
public:
    void times(std::uint64_t x) {
        if (pending_ * x > 0xffffffffULL) {
            flush();
        }
        pending_ *= x;
    }
    const BigUint& value() {
        flush();
        return value_;
    }

private:
    void flush() {
        if (pending_ != 1) {
            value_ *= static_cast<std::uint32_t>(pending_);
            pending_ = 1;
        }
    }
    BigUint value_;
    std::uint64_t pending_ = 1;
};

}  // namespace oracle
