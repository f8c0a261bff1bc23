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
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "dsc/bitio.hpp"
#include "dsc/exact.hpp"

namespace dsc {

using Label = std::uint32_t;
using Weight = int;

/// Label reserved for the escape pseudo-symbol. It sorts after every real symbol.
inline constexpr Label kEscape = std::numeric_limits<Label>::max();

struct LeafHandle {
    std::uint32_t node = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t generation = 0;

    friend bool operator==(const LeafHandle&, const LeafHandle&) = default;
};

struct WeightedLabel {
    Label label;
    Weight weight;
};

/// Binary code-tree whose leaves carry integer weights, built with Golumbic's
/// rule: merging two roots yields a root of weight max(w1, w2) + 1. Every
/// internal node's weight is max(children) + 1, so the root weight is the
/// largest leaf weight + depth. While the root weight is <= 0 every node's
/// depth is bounded by the negative of its weight; the dynamic operations
/// preserve that, re-attaching a leaf locally and rebuilding from the leaf
/// multiset when no local placement fits.
class MinimaxTree {
public:
    static constexpr Weight kMinWeight = -64;
    static constexpr Weight kMaxWeight = 60;

    MinimaxTree() = default;

    /// Golumbic construction. Roots of equal weight merge in creation order,
    /// the leaves being created in list order. Leaf j gets handle leaf_at(j).
    static MinimaxTree build(std::span<const WeightedLabel> leaves);
    /// Same as build() but reuses this tree's storage.
    void assign(std::span<const WeightedLabel> leaves);

    std::size_t leaf_count() const { return leaf_count_; }
    LeafHandle leaf_at(std::size_t j) const;
    /// Linear scan; returns an invalid handle if absent.
    LeafHandle find(Label label) const;
    bool valid(LeafHandle h) const;

    Label label(LeafHandle h) const;
    Weight weight(LeafHandle h) const;
    std::size_t depth(LeafHandle h) const;
    Weight root_weight() const { return nodes_[root_].weight; }

    /// max over leaves of weight + depth, by traversal.
    Weight minimax_cost() const;

    BitString codeword(LeafHandle h) const;
    /// Walks from the root consuming one bit per edge; returns the leaf label.
    Label decode(BitReader& src) const;

    void increment_weight(LeafHandle h);
    void decrement_weight(LeafHandle h);
    LeafHandle insert_leaf_like(LeafHandle like, Label label);
    void remove_leaf(LeafHandle h);

    /// Σ 2^weight over the leaves, scaled by 2^64.
    u128 kraft_sum() const { return kraft_; }
    static u128 kraft_term(Weight w);
    static constexpr u128 kKraftOne = u128{1} << 64;

    /// (label, weight, depth) for every leaf in left-to-right order.
    struct LeafInfo {
        Label label;
        Weight weight;
        std::size_t depth;
        LeafHandle handle;
    };
    std::vector<LeafInfo> leaves() const;
    /// Depth of each leaf, indexed by build order (see leaf_at).
    std::vector<std::size_t> leaf_depths() const;

    /// Checks links, the internal-weight rule and (if requested) the depth bound.
    bool check_invariants(bool require_depth_bound = true) const;

    std::uint64_t node_touches() const { return touches_; }
    std::uint64_t rebuilds() const { return rebuilds_; }

private:
    static constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

    struct Node {
        std::uint32_t parent = kNil;
        std::uint32_t left = kNil;
        std::uint32_t right = kNil;
        Weight weight = 0;
        Label label = 0;
        std::uint32_t generation = 0;
        bool live = false;
        bool is_leaf() const { return left == kNil; }
    };

    std::uint32_t new_node();
    void free_node(std::uint32_t id);
    const Node& leaf_node(LeafHandle h) const;
    void check_weight(Weight w) const;
    void refresh_upward(std::uint32_t from);
    void detach(std::uint32_t leaf);
    bool try_attach(std::uint32_t leaf, std::uint32_t path_end);
    void attach_above(std::uint32_t target, std::uint32_t leaf);
    void rebuild();
    void merge_roots(std::span<const std::uint32_t> leaf_ids);

    std::vector<Node> nodes_;
    std::vector<std::uint32_t> free_;
    std::vector<std::uint32_t> leaf_order_;  // leaf node ids in build order
    std::uint32_t root_ = kNil;
    std::uint32_t next_generation_ = 0;
    std::size_t leaf_count_ = 0;
    u128 kraft_ = 0;
    std::uint64_t touches_ = 0;
    std::uint64_t rebuilds_ = 0;

    // scratch for the bucket queue
    std::vector<std::vector<std::uint32_t>> buckets_;
    std::vector<std::uint32_t> path_;
};

}  // namespace dsc
