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
#include <deque>
#include <vector>

#include "dsc/bitio.hpp"
#include "dsc/exact.hpp"
#include "dsc/minimax.hpp"
#include "dsc/static_codes.hpp"

namespace dsc {

/// Plain weights: -ceil(log2(numerator / count)), slack term n.
struct ShannonRule {
    Weight weight(std::uint64_t numerator, std::uint64_t count, std::uint64_t /*slack*/) const {
        return -ceil_log2_ratio(numerator, count);
    }
    std::uint64_t slack(std::uint32_t alphabet_size, std::uint32_t /*distinct*/) const {
        return alphabet_size;
    }
    bool drops_escape() const { return false; }
};

/// Dynamic Shannon coding over a dynamic minimax code-tree. Leaf weights
/// carry slack: after i-1 characters the leaf of a sits between
/// rule(i + n, #a) and rule(max(i, n), #a), counts taken over the
/// escape-prefixed history. Each character costs one foreground weight
/// update of its own leaf and one background refresh of the leaf at the
/// head of a FIFO over the labels in the tree.
template <typename Rule>
class DynamicMinimaxCoder {
public:
    struct WeightWindow {
        Weight low;
        Weight high;
    };
    struct LabelStats {
        std::uint64_t increments = 0;
        std::uint64_t decrements = 0;
        Weight inserted_at = 0;
    };

    explicit DynamicMinimaxCoder(std::uint32_t alphabet_size, Rule rule = {});

    BitString encode(Symbol s);
    void encode(Symbol s, BitWriter& out);
    Symbol decode(BitReader& src);

    std::uint32_t alphabet_size() const { return n_; }
    /// 1-based index of the next character.
    std::uint64_t position() const { return position_; }
    std::uint32_t distinct() const { return distinct_; }
    bool escape_present() const { return escape_present_; }
    bool has_leaf(Label label) const;
    Weight leaf_weight(Label label) const;
    std::uint64_t count(Label label) const { return counts_[slot(label)]; }
    std::size_t queue_length() const { return queue_.size(); }
    const std::deque<std::uint32_t>& queue() const { return queue_; }
    const MinimaxTree& tree() const { return tree_; }
    const Rule& rule() const { return rule_; }

    /// Slack term used when the weights for the next character were set.
    std::uint64_t slack() const { return rule_.slack(n_, distinct_); }
    /// Allowed weight range of `label` right now.
    WeightWindow window(Label label) const;
    bool weights_in_window() const;
    /// The weight the background step would move `label` toward right now.
    Weight target(Label label) const;

    /// One background refresh: dequeue, move one unit toward target, requeue.
    /// Called once per character by encode/decode; exposed for inspection.
    void background_step();

    const LabelStats& stats(Label label) const { return stats_[slot(label)]; }
    unsigned max_foreground_steps() const { return max_foreground_steps_; }
    std::uint64_t node_touches() const { return tree_.node_touches() + queue_ops_; }
    std::uint64_t state_hash() const;

private:
    std::size_t slot(Label label) const { return label == kEscape ? n_ : label; }
    Label label_of(std::size_t slot) const { return slot == n_ ? kEscape : static_cast<Label>(slot); }
    void step_toward(std::size_t slot, Weight target);
    void update(Symbol s);

    std::uint32_t n_;
    unsigned index_width_;
    Rule rule_;
    MinimaxTree tree_;
    std::vector<LeafHandle> handles_;
    std::vector<std::uint64_t> counts_;
    std::vector<LabelStats> stats_;
    std::deque<std::uint32_t> queue_;
    std::uint64_t position_ = 1;
    std::uint32_t distinct_ = 0;
    bool escape_present_ = true;
    unsigned max_foreground_steps_ = 0;
    std::uint64_t queue_ops_ = 0;
};

using DynamicShannonCoder = DynamicMinimaxCoder<ShannonRule>;
extern template class DynamicMinimaxCoder<ShannonRule>;

}  // namespace dsc
