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
#include "dsc/adaptive_core.hpp"

#include <algorithm>
#include <bit>

namespace dsc {

bool ShannonLengths::operator()(const EscapeContext& ctx, std::vector<CodeLength>& out) {
    const std::size_t k = ctx.labels.size();
    scratch.resize(k);
    const int total_width = std::bit_width(ctx.total);
    bool same = out.size() == k && previous.size() == k;
    for (std::size_t j = 0; j < k; ++j) {
        const std::uint64_t c = ctx.counts[j];
        if (c == 0 || c > ctx.total) {
            throw InvalidArgument("context count out of range");
        }
        // ceil(log2(total / c)): c << k0 has the bit width of total.
        const int k0 = total_width - std::bit_width(c);
        const Weight w = -((c << k0) >= ctx.total ? k0 : k0 + 1);
        scratch[j] = {ctx.labels[j], w};
        same = same && previous[j].label == ctx.labels[j] && previous[j].weight == w;
    }
    // Same weighted labels give the same tree.
    if (same) {
        return false;
    }
    previous = scratch;
    tree.assign(scratch);
    const auto depths = tree.leaf_depths();
    out.clear();
    for (std::size_t j = 0; j < depths.size(); ++j) {
        out.push_back({ctx.labels[j], static_cast<unsigned>(depths[j])});
    }
    return true;
}

bool HuffmanLengths::operator()(const EscapeContext& ctx, std::vector<CodeLength>& out) {
    // Reindex labels to a dense table so the static routine applies; escape goes last.
    FrequencyTable f;
    f.alphabet_size = static_cast<std::uint32_t>(ctx.labels.size());
    f.counts.assign(ctx.counts.begin(), ctx.counts.end());
    f.total = ctx.total;
    out = huffman_lengths(f);
    for (auto& cl : out) {
        cl.label = ctx.labels[cl.label];
    }
    return true;
}

template <typename LengthRule>
SimpleDynamicCoder<LengthRule>::SimpleDynamicCoder(std::uint32_t alphabet_size)
    : n_(alphabet_size), index_width_(index_width(alphabet_size)), counts_(alphabet_size, 0) {}

template <typename LengthRule>
void SimpleDynamicCoder<LengthRule>::rebuild_code() {
    if (code_valid_) {
        return;
    }
    if (rule_(EscapeContext{labels_, label_counts_, position_}, lengths_)) {
        code_.assign(lengths_);
    }
    code_valid_ = true;
}

template <typename LengthRule>
int SimpleDynamicCoder<LengthRule>::current_length(Label label) {
    rebuild_code();
    return code_.contains(label) ? static_cast<int>(code_.length(label)) : -1;
}

template <typename LengthRule>
void SimpleDynamicCoder<LengthRule>::update(Symbol s) {
    if (counts_[s] == 0) {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), s);
        const auto at = it - labels_.begin();
        labels_.insert(it, s);
        label_counts_.insert(label_counts_.begin() + at, 0);
    }
    ++counts_[s];
    auto it = std::lower_bound(labels_.begin(), labels_.end(), s);
    ++label_counts_[static_cast<std::size_t>(it - labels_.begin())];
    ++position_;
    code_valid_ = false;
}

template <typename LengthRule>
void SimpleDynamicCoder<LengthRule>::encode(Symbol s, BitWriter& out) {
    if (s >= n_) {
        throw InvalidArgument("symbol outside the alphabet");
    }
    rebuild_code();
    if (counts_[s] > 0) {
        code_.write(s, out);
    } else {
        code_.write(kEscape, out);
        out.write_uint(s, index_width_);
    }
    update(s);
}

template <typename LengthRule>
BitString SimpleDynamicCoder<LengthRule>::encode(Symbol s) {
    if (s >= n_) {
        throw InvalidArgument("symbol outside the alphabet");
    }
    rebuild_code();
    BitString out;
    if (counts_[s] > 0) {
        out = code_.codeword(s);
    } else {
        out = code_.codeword(kEscape);
        out.append(index_bits(s, n_));
    }
    update(s);
    return out;
}

template <typename LengthRule>
Symbol SimpleDynamicCoder<LengthRule>::decode(BitReader& src) {
    rebuild_code();
    Label l = code_.decode(src);
    if (l == kEscape) {
        l = static_cast<Label>(src.read_uint(index_width_));
        if (l >= n_ || counts_[l] > 0) {
            throw CorruptData("escape followed by an invalid or repeated symbol index");
        }
    }
    update(l);
    return l;
}

template <typename LengthRule>
std::uint64_t SimpleDynamicCoder<LengthRule>::state_hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(position_);
    for (std::size_t j = 0; j < labels_.size(); ++j) {
        mix(labels_[j]);
        mix(label_counts_[j]);
    }
    return h;
}

template class SimpleDynamicCoder<ShannonLengths>;
template class SimpleDynamicCoder<HuffmanLengths>;

}  // namespace dsc
