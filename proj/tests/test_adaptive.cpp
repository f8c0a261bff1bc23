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

#include "dsc/adaptive_core.hpp"
#include "dsc/verify.hpp"
#include "oracles.hpp"

using namespace dsc;

namespace {

template <typename Coder>
void roundtrip_in_lockstep(const std::vector<Symbol>& text, std::uint32_t n) {
    Coder enc(n);
    Coder dec(n);
    BitWriter w;
    std::vector<BitString> words;
    for (auto s : text) {
        words.push_back(enc.encode(s));
        w.write(words.back());
    }
    w.close();
    const auto bytes = w.take_bytes();
    BitReader r(bytes);
    Coder mirror(n);
    for (std::size_t k = 0; k < text.size(); ++k) {
        const auto before = r.bits_consumed();
        REQUIRE(dec.decode(r) == text[k]);
        REQUIRE(r.bits_consumed() - before == words[k].size());
        mirror.encode(text[k]);
        REQUIRE(dec.state_hash() == mirror.state_hash());
    }
}

}  // namespace

TEST_CASE("first character is the bare index") {
    SimpleDynamicShannon c(4);
    CHECK(c.encode(2).to_string() == "10");
    SimpleDynamicShannon d(2);
    d.encode(0);
    CHECK(d.encode(0).size() == 1);
}

TEST_CASE("repetitions never carry index bits and obey the Shannon length") {
    std::mt19937_64 rng(9);
    for (std::uint32_t n : {2u, 5u, 64u}) {
        const auto text = zipf_text(3000, n, 1.1, rng());
        SimpleDynamicShannon c(n);
        std::vector<std::uint64_t> seen(n, 0);
        for (std::size_t k = 0; k < text.size(); ++k) {
            const auto s = text[k];
            const auto cw = c.encode(s);
            const std::uint64_t i = k + 1;
            if (seen[s] > 0) {
                REQUIRE(static_cast<int>(cw.size()) <= oracle::ceil_log2_ratio(i, seen[s]));
            } else {
                REQUIRE(static_cast<int>(cw.size()) <= oracle::ceil_log2_ratio(i, 1) + ceil_log2(n));
                REQUIRE(cw.size() >= static_cast<std::size_t>(ceil_log2(n)));
            }
            ++seen[s];
        }
    }
}

TEST_CASE("simple dynamic coders roundtrip with matching state") {
    std::mt19937_64 rng(4);
    for (std::uint32_t n : {2u, 3u, 16u, 256u}) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto text = trial % 2 ? uniform_text(rng() % 700, n, rng()) : zipf_text(rng() % 700, n, 1.3, rng());
            roundtrip_in_lockstep<SimpleDynamicShannon>(text, n);
            roundtrip_in_lockstep<SimpleDynamicHuffman>(text, n);
        }
    }
}

TEST_CASE("escape followed by a repeated index is rejected") {
    SimpleDynamicShannon enc(4);
    const auto first = enc.encode(1);
    // Escape codeword in the current context: a new symbol's output minus its index.
    const auto fresh = enc.encode(3);
    BitString esc;
    for (std::size_t j = 0; j + 2 < fresh.size(); ++j) {
        esc.push_back(fresh[j]);
    }
    BitWriter w;
    w.write(first);
    w.write(esc);
    w.write_uint(1, 2);
    w.close();
    const auto bytes = w.take_bytes();
    BitReader r(bytes);
    SimpleDynamicShannon dec(4);
    CHECK(dec.decode(r) == 1);
    CHECK_THROWS_AS(dec.decode(r), CorruptData);
}
