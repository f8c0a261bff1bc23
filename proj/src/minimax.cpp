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
#include "dsc/minimax.hpp"

#include <algorithm>
#include <utility>

namespace dsc {

u128 MinimaxTree::kraft_term(Weight w) {
    return u128{1} << static_cast<unsigned>(w - kMinWeight);
}

void MinimaxTree::check_weight(Weight w) const {
    if (w < kMinWeight || w > kMaxWeight) {
        throw InvalidArgument("leaf weight outside [-64, 60]");
    }
}

std::uint32_t MinimaxTree::new_node() {
    std::uint32_t id;
    if (!free_.empty()) {
        id = free_.back();
        free_.pop_back();
        nodes_[id] = Node{};
    } else {
        id = static_cast<std::uint32_t>(nodes_.size());
        nodes_.emplace_back();
    }
    nodes_[id].live = true;
    nodes_[id].generation = ++next_generation_;
    return id;
}

void MinimaxTree::free_node(std::uint32_t id) {
    nodes_[id].live = false;
    nodes_[id].generation = 0;
    free_.push_back(id);
}

MinimaxTree MinimaxTree::build(std::span<const WeightedLabel> leaves) {
    MinimaxTree t;
    t.assign(leaves);
    return t;
}

void MinimaxTree::assign(std::span<const WeightedLabel> leaves) {
    if (leaves.empty()) {
        throw InvalidArgument("minimax tree needs at least one leaf");
    }
    nodes_.clear();
    free_.clear();
    leaf_order_.clear();
    kraft_ = 0;
    for (const auto& l : leaves) {
        check_weight(l.weight);
        const auto id = new_node();
        nodes_[id].weight = l.weight;
        nodes_[id].label = l.label;
        leaf_order_.push_back(id);
        kraft_ += kraft_term(l.weight);
    }
    leaf_count_ = leaves.size();
    merge_roots(leaf_order_);
}

void MinimaxTree::merge_roots(std::span<const std::uint32_t> ids) {
    Weight lo = nodes_[ids[0]].weight;
    Weight hi = lo;
    for (auto id : ids) {
        lo = std::min(lo, nodes_[id].weight);
        hi = std::max(hi, nodes_[id].weight);
    }
    // Merged weights never exceed hi + ceil(log2 k) + 1.
    const std::size_t range = static_cast<std::size_t>(hi - lo) + 2 + 64;
    if (buckets_.size() < range) {
        buckets_.resize(range);
    }
    for (std::size_t b = 0; b < range; ++b) {
        buckets_[b].clear();
    }
    std::vector<std::size_t> head(range, 0);
    for (auto id : ids) {
        nodes_[id].parent = kNil;
        buckets_[static_cast<std::size_t>(nodes_[id].weight - lo)].push_back(id);
    }
    touches_ += ids.size();

    std::size_t cur = 0;
    auto pop_min = [&]() {
        while (head[cur] == buckets_[cur].size()) {
            ++cur;
        }
        return buckets_[cur][head[cur]++];
    };

    std::uint32_t last = ids[0];
    for (std::size_t remaining = ids.size(); remaining > 1; --remaining) {
        const auto a = pop_min();
        const auto b = pop_min();
        const auto p = new_node();
        Node& np = nodes_[p];
        np.left = a;
        np.right = b;
        np.weight = std::max(nodes_[a].weight, nodes_[b].weight) + 1;
        nodes_[a].parent = p;
        nodes_[b].parent = p;
        buckets_[static_cast<std::size_t>(np.weight - lo)].push_back(p);
        last = p;
        ++touches_;
    }
    root_ = last;
    nodes_[root_].parent = kNil;
}

LeafHandle MinimaxTree::leaf_at(std::size_t j) const {
    if (j >= leaf_order_.size()) {
        throw InvalidArgument("leaf index out of range");
    }
    const auto id = leaf_order_[j];
    return {id, nodes_[id].generation};
}

LeafHandle MinimaxTree::find(Label label) const {
    for (std::uint32_t id = 0; id < nodes_.size(); ++id) {
        const Node& n = nodes_[id];
        if (n.live && n.is_leaf() && n.label == label) {
            return {id, n.generation};
        }
    }
    return {};
}

bool MinimaxTree::valid(LeafHandle h) const {
    return h.node < nodes_.size() && nodes_[h.node].live && nodes_[h.node].is_leaf() &&
           nodes_[h.node].generation == h.generation;
}

const MinimaxTree::Node& MinimaxTree::leaf_node(LeafHandle h) const {
    if (!valid(h)) {
        throw InvalidArgument("stale or invalid leaf handle");
    }
    return nodes_[h.node];
}

Label MinimaxTree::label(LeafHandle h) const { return leaf_node(h).label; }

Weight MinimaxTree::weight(LeafHandle h) const { return leaf_node(h).weight; }

std::size_t MinimaxTree::depth(LeafHandle h) const {
    leaf_node(h);
    std::size_t d = 0;
    for (auto p = nodes_[h.node].parent; p != kNil; p = nodes_[p].parent) {
        ++d;
    }
    return d;
}

Weight MinimaxTree::minimax_cost() const {
    Weight best = std::numeric_limits<Weight>::min();
    for (const auto& l : leaves()) {
        best = std::max(best, l.weight + static_cast<Weight>(l.depth));
    }
    return best;
}

BitString MinimaxTree::codeword(LeafHandle h) const {
    leaf_node(h);
    std::uint64_t bits = 0;
    unsigned len = 0;
    BitString out;
    std::vector<bool> rev;
    for (auto v = h.node; nodes_[v].parent != kNil; v = nodes_[v].parent) {
        const bool right = nodes_[nodes_[v].parent].right == v;
        if (len < 64) {
            bits |= std::uint64_t{right} << len;
            ++len;
        } else {
            rev.push_back(right);
        }
    }
    const_cast<MinimaxTree*>(this)->touches_ += len + rev.size();
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
        out.push_back(*it);
    }
    out.append_uint(bits, len);
    return out;
}

Label MinimaxTree::decode(BitReader& src) const {
    auto v = root_;
    std::uint64_t steps = 0;
    while (!nodes_[v].is_leaf()) {
        v = src.read_bit() ? nodes_[v].right : nodes_[v].left;
        ++steps;
    }
    const_cast<MinimaxTree*>(this)->touches_ += steps;
    return nodes_[v].label;
}

void MinimaxTree::refresh_upward(std::uint32_t from) {
    for (auto p = from; p != kNil; p = nodes_[p].parent) {
        ++touches_;
        const Weight w = std::max(nodes_[nodes_[p].left].weight, nodes_[nodes_[p].right].weight) + 1;
        if (w == nodes_[p].weight) {
            break;
        }
        nodes_[p].weight = w;
    }
}

void MinimaxTree::detach(std::uint32_t leaf) {
    const auto p = nodes_[leaf].parent;
    const auto s = nodes_[p].left == leaf ? nodes_[p].right : nodes_[p].left;
    const auto g = nodes_[p].parent;
    nodes_[s].parent = g;
    if (g == kNil) {
        root_ = s;
    } else if (nodes_[g].left == p) {
        nodes_[g].left = s;
    } else {
        nodes_[g].right = s;
    }
    free_node(p);
    nodes_[leaf].parent = kNil;
    refresh_upward(g);
}

void MinimaxTree::attach_above(std::uint32_t target, std::uint32_t leaf) {
    const auto p = new_node();
    const auto g = nodes_[target].parent;
    nodes_[p].parent = g;
    if (g == kNil) {
        root_ = p;
    } else if (nodes_[g].left == target) {
        nodes_[g].left = p;
    } else {
        nodes_[g].right = p;
    }
    nodes_[p].left = target;
    nodes_[p].right = leaf;
    nodes_[target].parent = p;
    nodes_[leaf].parent = p;
    nodes_[p].weight = std::max(nodes_[target].weight, nodes_[leaf].weight) + 1;
    refresh_upward(g);
}

bool MinimaxTree::try_attach(std::uint32_t leaf, std::uint32_t path_end) {
    path_.clear();
    for (auto v = path_end; v != kNil; v = nodes_[v].parent) {
        path_.push_back(v);
    }
    touches_ += path_.size();
    const Weight wl = nodes_[leaf].weight;
    // path_ runs from path_end (deepest) up to the root.
    for (std::size_t k = 0; k < path_.size(); ++k) {
        const auto u = path_[k];
        const auto d = static_cast<Weight>(path_.size() - 1 - k);
        if (std::max(nodes_[u].weight, wl) + 1 + d <= 0) {
            attach_above(u, leaf);
            return nodes_[root_].weight <= 0;
        }
    }
    return false;
}

void MinimaxTree::rebuild() {
    ++rebuilds_;
    std::vector<std::uint32_t> ids;
    ids.reserve(leaf_count_);
    for (std::uint32_t id = 0; id < nodes_.size(); ++id) {
        if (!nodes_[id].live) {
            continue;
        }
        if (nodes_[id].is_leaf()) {
            ids.push_back(id);
        } else {
            free_node(id);
        }
    }
    std::sort(ids.begin(), ids.end(),
              [&](auto a, auto b) { return nodes_[a].label < nodes_[b].label; });
    merge_roots(ids);
}

void MinimaxTree::increment_weight(LeafHandle h) {
    const Weight w = leaf_node(h).weight;
    if (w + 1 > kMaxWeight) {
        throw InvalidArgument("leaf weight above maximum");
    }
    const u128 k = kraft_ - kraft_term(w) + kraft_term(w + 1);
    if (k > kKraftOne) {
        throw InfeasibleWeights("increment violates the Kraft inequality");
    }
    kraft_ = k;
    const auto v = h.node;
    nodes_[v].weight = w + 1;
    refresh_upward(nodes_[v].parent);
    if (nodes_[root_].weight <= 0) {
        return;
    }
    const auto p = nodes_[v].parent;
    const auto s = nodes_[p].left == v ? nodes_[p].right : nodes_[p].left;
    detach(v);
    if (!try_attach(v, s)) {
        rebuild();
    }
}

void MinimaxTree::decrement_weight(LeafHandle h) {
    const Weight w = leaf_node(h).weight;
    if (w - 1 < kMinWeight) {
        throw InvalidArgument("leaf weight below -64");
    }
    kraft_ = kraft_ - kraft_term(w) + kraft_term(w - 1);
    nodes_[h.node].weight = w - 1;
    refresh_upward(nodes_[h.node].parent);
}

LeafHandle MinimaxTree::insert_leaf_like(LeafHandle like, Label label) {
    const Weight w = leaf_node(like).weight;
    if (find(label).node != kNil) {
        throw InvalidArgument("duplicate leaf label");
    }
    const u128 k = kraft_ + kraft_term(w);
    if (k > kKraftOne) {
        throw InfeasibleWeights("insertion violates the Kraft inequality");
    }
    const auto id = new_node();
    nodes_[id].weight = w;
    nodes_[id].label = label;
    kraft_ = k;
    ++leaf_count_;
    leaf_order_.push_back(id);
    if (!try_attach(id, like.node)) {
        rebuild();
    }
    return {id, nodes_[id].generation};
}

void MinimaxTree::remove_leaf(LeafHandle h) {
    const Weight w = leaf_node(h).weight;
    if (leaf_count_ < 2) {
        throw InvalidArgument("cannot remove the last leaf");
    }
    detach(h.node);
    free_node(h.node);
    kraft_ -= kraft_term(w);
    --leaf_count_;
    std::erase(leaf_order_, h.node);
}

std::vector<MinimaxTree::LeafInfo> MinimaxTree::leaves() const {
    std::vector<LeafInfo> out;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root_, 0}};
    while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        const Node& n = nodes_[v];
        if (n.is_leaf()) {
            out.push_back({n.label, n.weight, d, {v, n.generation}});
        } else {
            stack.emplace_back(n.right, d + 1);
            stack.emplace_back(n.left, d + 1);
        }
    }
    return out;
}

std::vector<std::size_t> MinimaxTree::leaf_depths() const {
    std::vector<std::size_t> by_node(nodes_.size(), 0);
    std::vector<std::uint32_t> stack{root_};
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        const Node& n = nodes_[v];
        if (!n.is_leaf()) {
            by_node[n.left] = by_node[v] + 1;
            by_node[n.right] = by_node[v] + 1;
            stack.push_back(n.left);
            stack.push_back(n.right);
        }
    }
    std::vector<std::size_t> out;
    out.reserve(leaf_order_.size());
    for (auto id : leaf_order_) {
        out.push_back(by_node[id]);
    }
    return out;
}

bool MinimaxTree::check_invariants(bool require_depth_bound) const {
    if (root_ == kNil || nodes_[root_].parent != kNil) {
        return false;
    }
    std::size_t leaves_seen = 0;
    u128 kraft = 0;
    std::vector<std::pair<std::uint32_t, Weight>> stack{{root_, 0}};
    while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        const Node& n = nodes_[v];
        if (!n.live) {
            return false;
        }
        if (require_depth_bound && d > -n.weight) {
            return false;
        }
        if (n.is_leaf()) {
            if (n.right != kNil) {
                return false;
            }
            ++leaves_seen;
            kraft += kraft_term(n.weight);
            continue;
        }
        if (n.right == kNil || nodes_[n.left].parent != v || nodes_[n.right].parent != v) {
            return false;
        }
        if (n.weight != std::max(nodes_[n.left].weight, nodes_[n.right].weight) + 1) {
            return false;
        }
        stack.emplace_back(n.left, d + 1);
        stack.emplace_back(n.right, d + 1);
    }
    return leaves_seen == leaf_count_ && kraft == kraft_;
}

}  // namespace dsc
