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

// Template members of SumSplayTree.

namespace dsc {

template <typename Key, typename Less>
void SumSplayTree<Key, Less>::rotate(std::uint32_t x) {
    const auto p = nodes_[x].parent;
    const auto g = nodes_[p].parent;
    const int dir = nodes_[p].child[1] == x ? 1 : 0;
    const auto b = nodes_[x].child[1 - dir];
    nodes_[p].child[dir] = b;
    if (b != kNil) {
        nodes_[b].parent = p;
    }
    nodes_[x].child[1 - dir] = p;
    nodes_[p].parent = x;
    nodes_[x].parent = g;
    if (g == kNil) {
        root_ = x;
    } else {
        nodes_[g].child[nodes_[g].child[1] == p ? 1 : 0] = x;
    }
    pull(p);
    pull(x);
    ++touches_;
}

template <typename Key, typename Less>
void SumSplayTree<Key, Less>::splay(std::uint32_t x) {
    while (nodes_[x].parent != kNil) {
        const auto p = nodes_[x].parent;
        const auto g = nodes_[p].parent;
        if (g != kNil) {
            const bool zigzig = (nodes_[g].child[1] == p) == (nodes_[p].child[1] == x);
            rotate(zigzig ? p : x);
        }
        rotate(x);
    }
}

template <typename Key, typename Less>
std::uint32_t SumSplayTree<Key, Less>::locate(const Key& key, std::uint32_t& last) {
    last = kNil;
    auto v = root_;
    while (v != kNil) {
        ++touches_;
        last = v;
        if (less_(key, nodes_[v].key)) {
            v = nodes_[v].child[0];
        } else if (less_(nodes_[v].key, key)) {
            v = nodes_[v].child[1];
        } else {
            return v;
        }
    }
    return kNil;
}

template <typename Key, typename Less>
std::uint64_t SumSplayTree<Key, Less>::frequency(const Key& key) {
    std::uint32_t last;
    const auto v = locate(key, last);
    if (last != kNil) {
        splay(last);
    }
    return v == kNil ? 0 : nodes_[v].freq;
}

template <typename Key, typename Less>
std::uint64_t SumSplayTree<Key, Less>::prefix_sum(const Key& key) {
    std::uint64_t acc = 0;
    std::uint32_t last = kNil;
    auto v = root_;
    while (v != kNil) {
        ++touches_;
        last = v;
        if (less_(nodes_[v].key, key)) {
            acc += sum(nodes_[v].child[0]) + nodes_[v].freq;
            v = nodes_[v].child[1];
        } else {
            v = nodes_[v].child[0];
        }
    }
    if (last != kNil) {
        splay(last);
    }
    return acc;
}

template <typename Key, typename Less>
void SumSplayTree<Key, Less>::add(const Key& key, std::uint64_t delta) {
    std::uint32_t last;
    auto v = locate(key, last);
    if (v == kNil) {
        if (!free_.empty()) {
            v = free_.back();
            free_.pop_back();
            nodes_[v] = Node{};
        } else {
            v = static_cast<std::uint32_t>(nodes_.size());
            nodes_.emplace_back();
        }
        nodes_[v].key = key;
        nodes_[v].parent = last;
        if (last == kNil) {
            root_ = v;
        } else {
            nodes_[last].child[less_(key, nodes_[last].key) ? 0 : 1] = v;
        }
        ++size_;
    }
    nodes_[v].freq += delta;
    for (auto u = v; u != kNil; u = nodes_[u].parent) {
        pull(u);
        ++touches_;
    }
    splay(v);
}

template <typename Key, typename Less>
void SumSplayTree<Key, Less>::erase(const Key& key) {
    std::uint32_t last;
    const auto v = locate(key, last);
    if (v == kNil) {
        throw InvalidArgument("erase of an absent key");
    }
    splay(v);
    const auto l = nodes_[v].child[0];
    const auto r = nodes_[v].child[1];
    if (l != kNil) {
        nodes_[l].parent = kNil;
    }
    if (r != kNil) {
        nodes_[r].parent = kNil;
    }
    if (l == kNil) {
        root_ = r;
    } else {
        // Join: splay the maximum of the left tree, hang the right tree below it.
        auto m = l;
        while (nodes_[m].child[1] != kNil) {
            m = nodes_[m].child[1];
            ++touches_;
        }
        root_ = l;
        splay(m);
        nodes_[m].child[1] = r;
        if (r != kNil) {
            nodes_[r].parent = m;
        }
        pull(m);
    }
    free_.push_back(v);
    --size_;
}

template <typename Key, typename Less>
template <typename Pred>
typename SumSplayTree<Key, Less>::Search SumSplayTree<Key, Less>::search(Pred&& pred) {
    Search out;
    std::uint64_t acc = 0;
    std::uint32_t last = kNil;
    auto v = root_;
    while (v != kNil) {
        ++touches_;
        last = v;
        const Node& n = nodes_[v];
        const std::uint64_t before = acc + sum(n.child[0]);
        if (pred(n.key, before, n.freq)) {
            out.first = {true, n.key, n.freq, before};
            v = n.child[0];
        } else {
            out.prev = {true, n.key, n.freq, before};
            acc = before + n.freq;
            v = n.child[1];
        }
    }
    if (last != kNil) {
        splay(last);
    }
    return out;
}

template <typename Key, typename Less>
template <typename F>
void SumSplayTree<Key, Less>::for_each(F&& f) const {
    std::vector<std::uint32_t> stack;
    auto v = root_;
    while (v != kNil || !stack.empty()) {
        while (v != kNil) {
            stack.push_back(v);
            v = nodes_[v].child[0];
        }
        v = stack.back();
        stack.pop_back();
        f(nodes_[v].key, nodes_[v].freq);
        v = nodes_[v].child[1];
    }
}

template <typename Key, typename Less>
bool SumSplayTree<Key, Less>::check() const {
    if (root_ != kNil && nodes_[root_].parent != kNil) {
        return false;
    }
    bool ok = true;
    std::size_t count = 0;
    std::vector<std::uint32_t> stack;
    if (root_ != kNil) {
        stack.push_back(root_);
    }
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        ++count;
        const Node& n = nodes_[v];
        if (n.sum != n.freq + sum(n.child[0]) + sum(n.child[1])) {
            ok = false;
        }
        for (int d = 0; d < 2; ++d) {
            if (n.child[d] != kNil) {
                if (nodes_[n.child[d]].parent != v) {
                    ok = false;
                }
                stack.push_back(n.child[d]);
            }
        }
    }
    bool first = true;
    Key prev{};
    for_each([&](const Key& k, std::uint64_t) {
        if (!first && !less_(prev, k)) {
            ok = false;
        }
        prev = k;
        first = false;
    });
    return ok && count == size_;
}

}  // namespace dsc
