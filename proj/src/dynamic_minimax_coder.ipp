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
// Template body of DynamicMinimaxCoder; included by the translation units
// that instantiate it.

#include <algorithm>

#include "dsc/dynamic_shannon.hpp"

namespace dsc {

template <typename Rule>
DynamicMinimaxCoder<Rule>::DynamicMinimaxCoder(std::uint32_t alphabet_size, Rule rule)
    : n_(alphabet_size),
      index_width_(index_width(alphabet_size)),
      rule_(rule),
      handles_(alphabet_size + 1),
      counts_(alphabet_size + 1, 0),
      stats_(alphabet_size + 1) {
    counts_[n_] = 1;
    const std::uint64_t s = slack();
    const Weight w = rule_.weight(1 + s, 1, s);
    const WeightedLabel esc{kEscape, w};
    tree_.assign(std::span<const WeightedLabel>(&esc, 1));
    handles_[n_] = tree_.leaf_at(0);
    stats_[n_].inserted_at = w;
    queue_.push_back(n_);
}

template <typename Rule>
bool DynamicMinimaxCoder<Rule>::has_leaf(Label label) const {
    const auto k = slot(label);
    return k <= n_ && tree_.valid(handles_[k]);
}

template <typename Rule>
Weight DynamicMinimaxCoder<Rule>::leaf_weight(Label label) const {
    return tree_.weight(handles_[slot(label)]);
}

template <typename Rule>
typename DynamicMinimaxCoder<Rule>::WeightWindow DynamicMinimaxCoder<Rule>::window(Label label) const {
    const auto c = counts_[slot(label)];
    const std::uint64_t s = slack();
    return {rule_.weight(position_ + s, c, s), rule_.weight(std::max<std::uint64_t>(position_, s), c, s)};
}

template <typename Rule>
bool DynamicMinimaxCoder<Rule>::weights_in_window() const {
    for (std::size_t k = 0; k <= n_; ++k) {
        if (!tree_.valid(handles_[k])) {
            continue;
        }
        const auto win = window(label_of(k));
        const auto w = tree_.weight(handles_[k]);
        if (w < win.low || w > win.high) {
            return false;
        }
    }
    return true;
}

template <typename Rule>
Weight DynamicMinimaxCoder<Rule>::target(Label label) const {
    const std::uint64_t s = slack();
    return rule_.weight(position_ + s, counts_[slot(label)], s);
}

template <typename Rule>
void DynamicMinimaxCoder<Rule>::step_toward(std::size_t k, Weight target) {
    const Weight w = tree_.weight(handles_[k]);
    if (w < target) {
        tree_.increment_weight(handles_[k]);
        ++stats_[k].increments;
    } else if (w > target) {
        tree_.decrement_weight(handles_[k]);
        ++stats_[k].decrements;
    }
}

template <typename Rule>
void DynamicMinimaxCoder<Rule>::background_step() {
    const auto k = queue_.front();
    queue_.pop_front();
    queue_ops_ += 2;
    const std::uint64_t s = slack();
    step_toward(k, rule_.weight(position_ + s, counts_[k], s));
    queue_.push_back(k);
}

template <typename Rule>
void DynamicMinimaxCoder<Rule>::update(Symbol sym) {
    if (counts_[sym] == 0) {
        handles_[sym] = tree_.insert_leaf_like(handles_[n_], sym);
        stats_[sym].inserted_at = tree_.weight(handles_[sym]);
        queue_.push_back(sym);
        ++distinct_;
    }
    ++counts_[sym];
    // Weights from here on describe the history through this character.
    ++position_;
    const std::uint64_t s = slack();
    const Weight t = rule_.weight(position_ + s, counts_[sym], s);
    unsigned steps = 0;
    while (tree_.weight(handles_[sym]) != t) {
        step_toward(sym, t);
        ++steps;
    }
    max_foreground_steps_ = std::max(max_foreground_steps_, steps);
    background_step();
    if (rule_.drops_escape() && escape_present_ && distinct_ == n_) {
        tree_.remove_leaf(handles_[n_]);
        handles_[n_] = {};
        std::erase(queue_, n_);
        escape_present_ = false;
    }
}

template <typename Rule>
void DynamicMinimaxCoder<Rule>::encode(Symbol s, BitWriter& out) {
    if (s >= n_) {
        throw InvalidArgument("symbol outside the alphabet");
    }
    if (counts_[s] > 0) {
        out.write(tree_.codeword(handles_[s]));
    } else {
        out.write(tree_.codeword(handles_[n_]));
        out.write_uint(s, index_width_);
    }
    update(s);
}

template <typename Rule>
BitString DynamicMinimaxCoder<Rule>::encode(Symbol s) {
    if (s >= n_) {
        throw InvalidArgument("symbol outside the alphabet");
    }
    BitString out;
    if (counts_[s] > 0) {
        out = tree_.codeword(handles_[s]);
    } else {
        out = tree_.codeword(handles_[n_]);
        out.append_uint(s, index_width_);
    }
    update(s);
    return out;
}

template <typename Rule>
Symbol DynamicMinimaxCoder<Rule>::decode(BitReader& src) {
    Label l = tree_.decode(src);
    if (l == kEscape) {
        l = static_cast<Label>(src.read_uint(index_width_));
        if (l >= n_ || counts_[l] > 0) {
            throw CorruptData("escape followed by an invalid or repeated symbol index");
        }
    }
    update(l);
    return l;
}

template <typename Rule>
std::uint64_t DynamicMinimaxCoder<Rule>::state_hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(position_);
    for (const auto& leaf : tree_.leaves()) {
        mix(leaf.label);
        mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(leaf.weight)));
        mix(leaf.depth);
    }
    for (auto k : queue_) {
        mix(k);
    }
    return h;
}

}  // namespace dsc
