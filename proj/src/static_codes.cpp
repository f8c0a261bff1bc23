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
#include "dsc/static_codes.hpp"

#include <algorithm>
#include <numeric>

#include "dsc/exact.hpp"

namespace dsc {

FrequencyTable FrequencyTable::of(std::span<const Symbol> text, std::uint32_t alphabet_size) {
    FrequencyTable f;
    f.alphabet_size = alphabet_size;
    f.counts.assign(alphabet_size, 0);
    for (Symbol s : text) {
        if (s >= alphabet_size) {
            throw InvalidArgument("symbol outside the alphabet");
        }
        ++f.counts[s];
    }
    f.total = text.size();
    return f;
}

std::uint32_t FrequencyTable::distinct() const {
    return static_cast<std::uint32_t>(
        std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }));
}

unsigned shannon_length(std::uint64_t m, std::uint64_t count) {
    if (count == 0 || count > m) {
        throw InvalidArgument("shannon_length needs 1 <= count <= m");
    }
    return static_cast<unsigned>(ceil_log2_ratio(m, count));
}

std::vector<CodeLength> shannon_lengths(const FrequencyTable& f) {
    std::vector<CodeLength> out;
    for (Symbol s = 0; s < f.counts.size(); ++s) {
        if (f.counts[s] > 0) {
            out.push_back({s, shannon_length(f.total, f.counts[s])});
        }
    }
    return out;
}

namespace {

MinimaxTree shannon_tree(const FrequencyTable& f) {
    std::vector<WeightedLabel> leaves;
    for (const auto& cl : shannon_lengths(f)) {
        leaves.push_back({cl.label, -static_cast<Weight>(cl.length)});
    }
    if (leaves.empty()) {
        throw InvalidArgument("frequency table has no counted symbol");
    }
    return MinimaxTree::build(leaves);
}

// Huffman tree as child arrays; leaves are nodes [0, k).
struct HuffmanTree {
    std::vector<Label> labels;
    std::vector<std::uint32_t> left;
    std::vector<std::uint32_t> right;
    std::uint32_t root = 0;
};

HuffmanTree huffman_tree(const FrequencyTable& f) {
    HuffmanTree t;
    std::vector<std::uint64_t> weight;
    for (Symbol s = 0; s < f.counts.size(); ++s) {
        if (f.counts[s] > 0) {
            t.labels.push_back(s);
            weight.push_back(f.counts[s]);
        }
    }
    const std::size_t k = t.labels.size();
    if (k == 0) {
        throw InvalidArgument("frequency table has no counted symbol");
    }
    std::vector<std::uint32_t> leaves(k);
    std::iota(leaves.begin(), leaves.end(), 0U);
    std::stable_sort(leaves.begin(), leaves.end(),
                     [&](auto a, auto b) { return weight[a] < weight[b]; });
    t.left.assign(k, 0);
    t.right.assign(k, 0);
    std::vector<std::uint32_t> internal;
    std::size_t li = 0;
    std::size_t ii = 0;
    auto pop = [&]() {
        // On equal weights the leaf was created first.
        if (li < k && (ii == internal.size() || weight[leaves[li]] <= weight[internal[ii]])) {
            return leaves[li++];
        }
        return internal[ii++];
    };
    t.root = leaves[0];
    for (std::size_t r = k; r > 1; --r) {
        const auto a = pop();
        const auto b = pop();
        const auto p = static_cast<std::uint32_t>(weight.size());
        weight.push_back(weight[a] + weight[b]);
        t.left.push_back(a);
        t.right.push_back(b);
        internal.push_back(p);
        t.root = p;
    }
    return t;
}

template <typename Visit>
void walk_huffman(const HuffmanTree& t, Visit&& visit) {
    struct Item {
        std::uint32_t node;
        BitString path;
    };
    std::vector<Item> stack{{t.root, {}}};
    const auto k = static_cast<std::uint32_t>(t.labels.size());
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        if (it.node < k) {
            visit(t.labels[it.node], it.path);
            continue;
        }
        BitString l = it.path;
        l.push_back(false);
        BitString r = std::move(it.path);
        r.push_back(true);
        stack.push_back({t.right[it.node], std::move(r)});
        stack.push_back({t.left[it.node], std::move(l)});
    }
}

}  // namespace

CodeAssignment shannon_code(const FrequencyTable& f) {
    const MinimaxTree t = shannon_tree(f);
    CodeAssignment out;
    for (const auto& leaf : t.leaves()) {
        out.emplace(leaf.label, t.codeword(leaf.handle));
    }
    return out;
}

std::vector<CodeLength> huffman_lengths(const FrequencyTable& f) {
    std::vector<CodeLength> out;
    walk_huffman(huffman_tree(f), [&](Label l, const BitString& path) {
        out.push_back({l, static_cast<unsigned>(path.size())});
    });
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.label < b.label; });
    return out;
}

CodeAssignment huffman_code(const FrequencyTable& f) {
    CodeAssignment out;
    walk_huffman(huffman_tree(f), [&](Label l, const BitString& path) { out.emplace(l, path); });
    return out;
}

std::vector<CodeLength> static_lengths(const FrequencyTable& f, StaticAlgorithm algo) {
    if (algo == StaticAlgorithm::Huffman) {
        return huffman_lengths(f);
    }
    const MinimaxTree t = shannon_tree(f);
    const auto depths = t.leaf_depths();
    std::vector<CodeLength> out;
    for (std::size_t j = 0; j < depths.size(); ++j) {
        out.push_back({t.label(t.leaf_at(j)), static_cast<unsigned>(depths[j])});
    }
    return out;
}

void CanonicalCode::assign(std::span<const CodeLength> lengths) {
    by_label_.clear();
    sorted_.clear();
    max_length_ = 0;
    u128 kraft = 0;
    for (const auto& cl : lengths) {
        if (cl.length > 64) {
            throw InvalidArgument("canonical code length above 64");
        }
        max_length_ = std::max(max_length_, cl.length);
        kraft += u128{1} << (64 - cl.length);
        by_label_.push_back({cl.label, cl.length, 0});
    }
    if (kraft > (u128{1} << 64)) {
        throw InvalidArgument("code lengths violate the Kraft inequality");
    }
    std::sort(by_label_.begin(), by_label_.end(), [](auto& a, auto& b) { return a.label < b.label; });
    for (std::size_t j = 1; j < by_label_.size(); ++j) {
        if (by_label_[j].label == by_label_[j - 1].label) {
            throw InvalidArgument("duplicate label in canonical code");
        }
    }
    count_.assign(max_length_ + 1, 0);
    for (const auto& e : by_label_) {
        ++count_[e.length];
    }
    offset_.assign(max_length_ + 2, 0);
    for (unsigned l = 0; l <= max_length_; ++l) {
        offset_[l + 1] = offset_[l] + count_[l];
    }
    first_.assign(max_length_ + 1, 0);
    for (unsigned l = 1; l <= max_length_; ++l) {
        first_[l] = (first_[l - 1] + count_[l - 1]) << 1;
    }
    // by_label_ is label-sorted, so a stable pass by length gives (length, label) order.
    sorted_.resize(by_label_.size());
    std::vector<std::uint32_t> next(offset_.begin(), offset_.end() - 1);
    for (auto& e : by_label_) {
        const auto pos = next[e.length]++;
        sorted_[pos] = e.label;
        e.code = static_cast<std::uint64_t>(first_[e.length] + (pos - offset_[e.length]));
    }
}

const CanonicalCode::Entry& CanonicalCode::entry(Label label) const {
    auto it = std::lower_bound(by_label_.begin(), by_label_.end(), label,
                               [](const Entry& e, Label l) { return e.label < l; });
    if (it == by_label_.end() || it->label != label) {
        throw InvalidArgument("label has no codeword");
    }
    return *it;
}

bool CanonicalCode::contains(Label label) const {
    auto it = std::lower_bound(by_label_.begin(), by_label_.end(), label,
                               [](const Entry& e, Label l) { return e.label < l; });
    return it != by_label_.end() && it->label == label;
}

unsigned CanonicalCode::length(Label label) const { return entry(label).length; }

BitString CanonicalCode::codeword(Label label) const {
    const Entry& e = entry(label);
    return BitString::from_uint(e.code, e.length);
}

void CanonicalCode::write(Label label, BitWriter& out) const {
    const Entry& e = entry(label);
    out.write_uint(e.code, e.length);
}

Label CanonicalCode::decode(BitReader& src) const {
    if (sorted_.empty()) {
        throw CorruptData("decoding with an empty code");
    }
    if (count_[0] == 1) {
        return sorted_[0];
    }
    u128 code = 0;
    for (unsigned l = 1; l <= max_length_; ++l) {
        code = (code << 1) | (src.read_bit() ? 1U : 0U);
        if (count_[l] != 0 && code >= first_[l] && code - first_[l] < count_[l]) {
            return sorted_[offset_[l] + static_cast<std::uint32_t>(code - first_[l])];
        }
    }
    throw CorruptData("bit pattern is not a codeword");
}

void write_preface(BitWriter& out, std::uint32_t alphabet_size, std::span<const CodeLength> lengths) {
    const unsigned width = index_width(alphabet_size);
    out.write_uint(alphabet_size, 32);
    out.write_uint(lengths.size(), 32);
    for (const auto& cl : lengths) {
        if (cl.length > 255) {
            throw InvalidArgument("codeword length does not fit the preface");
        }
        out.write_uint(cl.label, width);
        out.write_uint(cl.length, 8);
    }
}

Preface read_preface(BitReader& in) {
    Preface p;
    p.alphabet_size = static_cast<std::uint32_t>(in.read_uint(32));
    if (p.alphabet_size < 2) {
        throw CorruptData("preface alphabet size below 2");
    }
    const auto k = in.read_uint(32);
    if (k > p.alphabet_size) {
        throw CorruptData("preface lists more symbols than the alphabet has");
    }
    const unsigned width = index_width(p.alphabet_size);
    u128 kraft = 0;
    for (std::uint64_t j = 0; j < k; ++j) {
        const auto sym = static_cast<Label>(in.read_uint(width));
        const auto len = static_cast<unsigned>(in.read_uint(8));
        if (sym >= p.alphabet_size || (!p.lengths.empty() && sym <= p.lengths.back().label)) {
            throw CorruptData("preface symbols out of order or out of range");
        }
        if (len > 64) {
            throw CorruptData("preface codeword length above 64");
        }
        kraft += u128{1} << (64 - len);
        if (kraft > (u128{1} << 64)) {
            throw CorruptData("preface lengths violate the Kraft inequality");
        }
        p.lengths.push_back({sym, len});
    }
    return p;
}

StaticEncoding encode_static(std::span<const Symbol> text, std::uint32_t alphabet_size,
                             StaticAlgorithm algo) {
    StaticEncoding out;
    if (text.empty()) {
        return out;
    }
    const auto f = FrequencyTable::of(text, alphabet_size);
    const auto lengths = static_lengths(f, algo);
    const CanonicalCode code(lengths);
    BitWriter pw;
    write_preface(pw, alphabet_size, lengths);
    const auto pbits = pw.bits_written();
    const auto pbytes = pw.take_bytes();
    BitReader pr(pbytes);
    out.preface = pr.read(pbits);
    for (Symbol s : text) {
        out.body.append(code.codeword(s));
    }
    return out;
}

namespace {
std::vector<std::uint8_t> pack(const BitString& bits) {
    BitWriter w;
    w.write(bits);
    return w.take_bytes();
}
}  // namespace

std::vector<Symbol> decode_static(const BitString& preface, const BitString& body, std::uint64_t m) {
    std::vector<Symbol> out;
    if (m == 0) {
        return out;
    }
    const auto pbytes = pack(preface);
    BitReader pr(pbytes);
    const Preface p = read_preface(pr);
    if (pr.bits_consumed() != preface.size()) {
        throw CorruptData("preface has trailing bits");
    }
    if (p.lengths.empty()) {
        throw CorruptData("preface lists no symbols for a nonempty message");
    }
    const CanonicalCode code(p.lengths);
    const auto bbytes = pack(body);
    BitReader br(bbytes);
    out.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        out.push_back(code.decode(br));
        if (br.bits_consumed() > body.size()) {
            throw TruncatedStream();
        }
    }
    if (br.bits_consumed() != body.size()) {
        throw CorruptData("body has trailing bits");
    }
    return out;
}

}  // namespace dsc
