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
#include <limits>
#include <optional>
#include <vector>

#include "dsc/errors.hpp"

namespace dsc {

/// Splay tree ordered by Key; each node holds a frequency and the frequency
/// sum of its subtree. Every query splays the last node it touched.
template <typename Key, typename Less = std::less<Key>>
class SumSplayTree {
public:
    struct Hit {
        bool found = false;
        Key key{};
        std::uint64_t freq = 0;
        std::uint64_t before = 0;  // total frequency of smaller keys
    };
    struct Search {
        Hit first;  // smallest key satisfying the predicate
        Hit prev;   // largest key not satisfying it
    };

    std::uint64_t total() const { return root_ == kNil ? 0 : nodes_[root_].sum; }
    std::size_t size() const { return size_; }

    std::uint64_t frequency(const Key& key);
    /// Sum of frequencies of keys strictly less than `key`.
    std::uint64_t prefix_sum(const Key& key);
    /// Adds delta to key's frequency, inserting the key if absent.
    void add(const Key& key, std::uint64_t delta);
    void erase(const Key& key);

    /// pred(key, before, freq) must be false for a prefix of the order and
    /// true for the rest.
    template <typename Pred>
    Search search(Pred&& pred);

    /// In-order visit of (key, freq).
    template <typename F>
    void for_each(F&& f) const;

    bool check() const;
    std::uint64_t touches() const { return touches_; }

private:
    static constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();
    struct Node {
        Key key{};
        std::uint64_t freq = 0;
        std::uint64_t sum = 0;
        std::uint32_t parent = kNil;
        std::uint32_t child[2] = {kNil, kNil};
    };

    std::uint64_t sum(std::uint32_t v) const { return v == kNil ? 0 : nodes_[v].sum; }
    void pull(std::uint32_t v) { nodes_[v].sum = nodes_[v].freq + sum(nodes_[v].child[0]) + sum(nodes_[v].child[1]); }
    void rotate(std::uint32_t x);
    void splay(std::uint32_t x);
    std::uint32_t locate(const Key& key, std::uint32_t& last);

    std::vector<Node> nodes_;
    std::vector<std::uint32_t> free_;
    std::uint32_t root_ = kNil;
    std::size_t size_ = 0;
    std::uint64_t touches_ = 0;
    Less less_{};
};

/// Symbols in alphabet order with their frequencies over the history so far.
class AlphaSumTree {
public:
    /// Frequency sum of the symbols lexicographically below `a`.
    std::uint64_t prefix_sum(std::uint32_t a) { return tree_.prefix_sum(a); }
    void insert_or_increment(std::uint32_t a) { tree_.add(a, 1); }
    std::uint64_t frequency(std::uint32_t a) { return tree_.frequency(a); }
    std::uint64_t total() const { return tree_.total(); }

    SumSplayTree<std::uint32_t>& tree() { return tree_; }
    const SumSplayTree<std::uint32_t>& tree() const { return tree_; }

private:
    SumSplayTree<std::uint32_t> tree_;
};

/// Symbols 0..capacity-1 kept in non-increasing order of frequency, ties by
/// ascending symbol, with cumulative sums. Symbols with frequency 0 are absent.
class FreqOrderList {
public:
    struct Entry {
        std::uint32_t symbol;
        std::uint64_t freq;
        std::uint64_t before;
    };

    explicit FreqOrderList(std::uint32_t capacity) : freq_(capacity, 0) {}

    std::uint64_t get(std::uint32_t a) const;
    std::uint64_t before(std::uint32_t a);
    void increment(std::uint32_t a);
    /// The last symbol whose preceding total is at most k; 0 <= k < total.
    std::uint32_t select(std::uint64_t k);
    /// The first entry whose preceding total is at least t, if any.
    std::optional<Entry> first_at_or_after(std::uint64_t t);
    /// The entry just before `a` in list order, if any.
    std::optional<Entry> previous(std::uint32_t a);

    std::uint64_t total() const { return tree_.total(); }
    std::size_t size() const { return tree_.size(); }
    bool contains(std::uint32_t a) const { return a < freq_.size() && freq_[a] > 0; }
    std::vector<Entry> entries() const;
    bool check() const;
    std::uint64_t touches() const { return tree_.touches(); }

    struct Key {
        std::uint64_t freq;
        std::uint32_t symbol;
    };
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            return a.freq != b.freq ? a.freq > b.freq : a.symbol < b.symbol;
        }
    };

private:
    void require(std::uint32_t a) const;

    std::vector<std::uint64_t> freq_;
    SumSplayTree<Key, KeyLess> tree_;
};

}  // namespace dsc

#include "dsc/partial_sums_impl.hpp"
