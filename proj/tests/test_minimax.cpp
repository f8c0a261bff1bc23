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

#include <map>
#include <set>
#include <random>

#include "dsc/minimax.hpp"
#include "oracles.hpp"

using dsc::Label;
using dsc::LeafHandle;
using dsc::MinimaxTree;
using dsc::WeightedLabel;

namespace {

Label decode_bits(const MinimaxTree& t, const dsc::BitString& bits) {
    dsc::BitWriter w;
    w.write(bits);
    w.write_uint(0, 8);
    w.close();
    const auto bytes = w.take_bytes();
    dsc::BitReader r(bytes);
    const Label l = t.decode(r);
    REQUIRE(r.bits_consumed() == bits.size());
    return l;
}

// Leaf-level checks that do not trust the tree's own bookkeeping.
void check_leaves(const MinimaxTree& t) {
    const auto leaves = t.leaves();
    REQUIRE(leaves.size() == t.leaf_count());
    std::vector<dsc::BitString> words;
    for (const auto& leaf : leaves) {
        REQUIRE(static_cast<long>(leaf.depth) <= -static_cast<long>(leaf.weight));
        const auto cw = t.codeword(leaf.handle);
        REQUIRE(cw.size() == leaf.depth);
        REQUIRE(decode_bits(t, cw) == leaf.label);
        words.push_back(cw);
    }
    if (words.size() <= 64) {
        REQUIRE(oracle::prefix_free(words));
    }
}

}  // namespace

TEST_CASE("Golumbic construction on a small example") {
    const std::vector<WeightedLabel> leaves = {{0, -1}, {1, -2}, {2, -2}};
    const auto t = MinimaxTree::build(leaves);
    CHECK(t.root_weight() == 0);
    CHECK(t.minimax_cost() == 0);
    CHECK(t.depth(t.leaf_at(0)) == 1);
    CHECK(t.depth(t.leaf_at(1)) == 2);
    CHECK(t.depth(t.leaf_at(2)) == 2);
    CHECK(t.codeword(t.leaf_at(0)).size() == 1);
    CHECK(t.codeword(t.leaf_at(1)).size() == 2);
    CHECK(t.codeword(t.leaf_at(2)).size() == 2);
    CHECK(t.check_invariants());
    check_leaves(t);
}

TEST_CASE("single leaf and balanced trees") {
    const std::vector<WeightedLabel> one = {{7, 0}};
    const auto t = MinimaxTree::build(one);
    CHECK(t.depth(t.leaf_at(0)) == 0);
    CHECK(t.codeword(t.leaf_at(0)).size() == 0);
    CHECK(t.minimax_cost() == 0);
    std::vector<std::uint8_t> any = {0xFF};
    dsc::BitReader r(any);
    CHECK(t.decode(r) == 7);
    CHECK(r.bits_consumed() == 0);

    const std::vector<WeightedLabel> three = {{0, 0}, {1, 0}, {2, 0}};
    CHECK(MinimaxTree::build(three).minimax_cost() == 2);
    const std::vector<WeightedLabel> four = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    CHECK(MinimaxTree::build(four).minimax_cost() == 2);

    const std::vector<WeightedLabel> w = {{3, -5}};
    CHECK(MinimaxTree::build(w).minimax_cost() == -5);
}

TEST_CASE("Golumbic matches brute force on small weight vectors") {
    for (std::size_t k = 1; k <= 4; ++k) {
        std::vector<int> w(k, -6);
        for (;;) {
            std::vector<WeightedLabel> leaves;
            for (std::size_t j = 0; j < k; ++j) {
                leaves.push_back({static_cast<Label>(j), w[j]});
            }
            const auto t = MinimaxTree::build(leaves);
            REQUIRE(t.minimax_cost() == oracle::minimax(w));
            REQUIRE(t.check_invariants(false));
            std::size_t j = 0;
            while (j < k && w[j] == 0) {
                w[j++] = -6;
            }
            if (j == k) {
                break;
            }
            ++w[j];
        }
    }
}

TEST_CASE("weight updates") {
    auto t = MinimaxTree::build(std::vector<WeightedLabel>{{0, 0}});
    t.decrement_weight(t.leaf_at(0));
    CHECK(t.weight(t.leaf_at(0)) == -1);
    CHECK(t.depth(t.leaf_at(0)) == 0);

    auto u = MinimaxTree::build(std::vector<WeightedLabel>{{0, -1}, {1, -2}, {2, -2}});
    const auto a = u.leaf_at(0);
    u.decrement_weight(a);
    CHECK(u.weight(a) == -2);
    for (const auto& leaf : u.leaves()) {
        CHECK(leaf.depth <= 2);
    }
    check_leaves(u);

    auto v = MinimaxTree::build(std::vector<WeightedLabel>{{0, -2}, {1, -2}, {2, -3}, {3, -3}});
    const auto b = v.leaf_at(2);
    v.increment_weight(b);
    v.decrement_weight(b);
    std::multiset<int> weights;
    for (const auto& leaf : v.leaves()) {
        weights.insert(leaf.weight);
    }
    CHECK(weights == std::multiset<int>{-3, -3, -2, -2});
    CHECK(v.check_invariants());

    auto full = MinimaxTree::build(std::vector<WeightedLabel>{{0, -1}, {1, -1}});
    CHECK_THROWS_AS(full.increment_weight(full.leaf_at(0)), dsc::InfeasibleWeights);
    CHECK(full.check_invariants());
}

TEST_CASE("insert like and remove") {
    auto t = MinimaxTree::build(std::vector<WeightedLabel>{{dsc::kEscape, -1}});
    const auto a = t.insert_leaf_like(t.leaf_at(0), 0);
    CHECK(t.leaf_count() == 2);
    CHECK(t.weight(a) == -1);
    CHECK(t.depth(a) == 1);
    CHECK(t.depth(t.find(dsc::kEscape)) == 1);
    CHECK_THROWS_AS(t.insert_leaf_like(a, 0), dsc::InvalidArgument);
    CHECK_THROWS_AS(t.insert_leaf_like(a, 1), dsc::InfeasibleWeights);
    t.remove_leaf(a);
    CHECK(t.leaf_count() == 1);
    CHECK_FALSE(t.valid(a));
    CHECK_THROWS_AS(t.remove_leaf(t.find(dsc::kEscape)), dsc::InvalidArgument);
}

TEST_CASE("random dynamic operations keep the invariants") {
    std::mt19937_64 rng(11);
    auto t = MinimaxTree::build(std::vector<WeightedLabel>{{0, -3}});
    std::map<Label, LeafHandle> live{{0, t.leaf_at(0)}};
    std::map<Label, int> shadow{{0, -3}};
    Label next = 1;
    auto kraft_ok = [&](Label skip, int extra_weight) {
        long double s = 0;
        for (auto [l, w] : shadow) {
            if (l != skip) {
                s += std::ldexp(1.0L, w);
            }
        }
        return s + std::ldexp(1.0L, extra_weight) <= 1.0L;
    };
    for (int step = 0; step < 20000; ++step) {
        const auto op = rng() % 4;
        auto it = live.begin();
        std::advance(it, static_cast<long>(rng() % live.size()));
        const Label l = it->first;
        const LeafHandle h = it->second;
        if (op == 0 && shadow[l] < 0) {
            if (kraft_ok(l, shadow[l] + 1)) {
                t.increment_weight(h);
                ++shadow[l];
            } else {
                CHECK_THROWS_AS(t.increment_weight(h), dsc::InfeasibleWeights);
            }
        } else if (op == 1 && shadow[l] > -20) {
            t.decrement_weight(h);
            --shadow[l];
        } else if (op == 2 && live.size() < 40) {
            if (kraft_ok(dsc::kEscape, shadow[l])) {
                live[next] = t.insert_leaf_like(h, next);
                shadow[next] = shadow[l];
                ++next;
            }
        } else if (op == 3 && live.size() > 1) {
            t.remove_leaf(h);
            live.erase(l);
            shadow.erase(l);
        }
        REQUIRE(t.check_invariants());
        for (auto [lab, hd] : live) {
            REQUIRE(t.weight(hd) == shadow[lab]);
            REQUIRE(t.label(hd) == lab);
        }
        if (step % 50 == 0) {
            check_leaves(t);
        }
    }
}
