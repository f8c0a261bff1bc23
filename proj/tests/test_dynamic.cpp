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
#include <doctest.h>

#include <random>

#include "dsc/dynamic_shannon.hpp"
#include "dsc/verify.hpp"
#include "oracles.hpp"

using namespace dsc;

namespace {

// Window from the definition: counts over the escape-prefixed history of
// length i (the next character's position).
void check_window(const DynamicShannonCoder& c, std::uint32_t n, const std::vector<std::uint64_t>& seen) {
    const std::uint64_t i = c.position();
    for (std::uint32_t a = 0; a <= n; ++a) {
        const Label l = a == n ? kEscape : a;
        const std::uint64_t count = a == n ? 1 : seen[a];
        if (count == 0) {
            REQUIRE_FALSE(c.has_leaf(l));
            continue;
        }
        REQUIRE(c.has_leaf(l));
        const int low = -oracle::ceil_log2_ratio(i + n, count);
        const int high = -oracle::ceil_log2_ratio(std::max<std::uint64_t>(i, n), count);
        const int w = c.leaf_weight(l);
        REQUIRE(w >= low);
        REQUIRE(w <= high);
    }
}

}  // namespace

TEST_CASE("first character with n = 2") {
    DynamicShannonCoder c(2);
    CHECK(c.leaf_weight(kEscape) == -2);
    CHECK(c.tree().depth(c.tree().find(kEscape)) == 0);
    CHECK(c.encode(1).to_string() == "1");
}

TEST_CASE("empty input") {
    DynamicShannonCoder c(5);
    CHECK(c.position() == 1);
    CHECK(c.queue_length() == 1);
}

TEST_CASE("window, lengths and queue on random inputs") {
    std::mt19937_64 rng(21);
    for (std::uint32_t n : {2u, 7u, 16u, 256u}) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto text = trial == 0 ? uniform_text(2000, n, rng()) : zipf_text(2000, n, 1.2 + trial, rng());
            DynamicShannonCoder c(n);
            std::vector<std::uint64_t> seen(n, 0);
            std::uint32_t distinct = 0;
            check_window(c, n, seen);
            for (std::size_t k = 0; k < text.size(); ++k) {
                const auto s = text[k];
                const std::uint64_t i = k + 1;
                const auto cw = c.encode(s);
                if (seen[s] > 0) {
                    REQUIRE(static_cast<int>(cw.size()) <= oracle::ceil_log2_ratio(i + n, seen[s]));
                } else {
                    REQUIRE(static_cast<int>(cw.size()) <= oracle::ceil_log2_ratio(i + n, 1) + ceil_log2(n));
                    ++distinct;
                }
                ++seen[s];
                check_window(c, n, seen);
                REQUIRE(c.queue_length() == distinct + 1);
                REQUIRE(c.tree().check_invariants());
            }
            CHECK(c.max_foreground_steps() <= 1);
        }
    }
}

TEST_CASE("background reaches every target within one pass") {
    std::mt19937_64 rng(2);
    const std::uint32_t n = 12;
    const auto text = zipf_text(500, n, 1.0, rng());
    DynamicShannonCoder c(n);
    for (auto s : text) {
        c.encode(s);
    }
    const auto hash = c.state_hash();
    const std::size_t len = c.queue_length();
    for (std::size_t k = 0; k < len; ++k) {
        c.background_step();
    }
    for (std::uint32_t a = 0; a < n; ++a) {
        if (c.has_leaf(a)) {
            CHECK(c.leaf_weight(a) == c.target(a));
        }
    }
    CHECK(c.leaf_weight(kEscape) == c.target(kEscape));
    // A full pass with everything at target changes nothing.
    const auto settled = c.state_hash();
    for (std::size_t k = 0; k < len; ++k) {
        c.background_step();
    }
    CHECK(c.state_hash() == settled);
    (void)hash;
}

TEST_CASE("roundtrip with matching state") {
    std::mt19937_64 rng(8);
    for (std::uint32_t n : {2u, 16u, 256u}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto text = trial % 2 ? uniform_text(rng() % 3000, n, rng()) : zipf_text(rng() % 3000, n, 1.2, rng());
            DynamicShannonCoder enc(n);
            DynamicShannonCoder dec(n);
            BitWriter w;
            std::vector<std::uint64_t> hashes;
            for (auto s : text) {
                enc.encode(s, w);
                hashes.push_back(enc.state_hash());
            }
            w.close();
            const auto bytes = w.take_bytes();
            BitReader r(bytes);
            for (std::size_t k = 0; k < text.size(); ++k) {
                REQUIRE(dec.decode(r) == text[k]);
                REQUIRE(dec.state_hash() == hashes[k]);
            }
        }
    }
}

TEST_CASE("truncated streams throw") {
    const auto text = uniform_text(200, 16, 1);
    DynamicShannonCoder enc(16);
    BitWriter w;
    for (auto s : text) {
        enc.encode(s, w);
    }
    const auto bits = w.bits_written();
    w.close();
    auto bytes = w.take_bytes();
    bytes.resize(bytes.size() / 2);
    BitReader r(bytes);
    DynamicShannonCoder dec(16);
    CHECK_THROWS_AS(
        [&] {
            for (std::size_t k = 0; k < text.size(); ++k) {
                dec.decode(r);
            }
        }(),
        TruncatedStream);
    CHECK(bits > 0);
}
