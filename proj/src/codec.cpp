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
#include "dsc/codec.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <streambuf>

#include "dsc/adaptive_core.hpp"
#include "dsc/alphabetic.hpp"
#include "dsc/dynamic_shannon.hpp"
#include "dsc/length_restricted.hpp"
#include "dsc/unequal_cost.hpp"

namespace dsc {

namespace {

constexpr char kMagic[4] = {'D', 'S', 'C', '1'};
constexpr std::uint16_t kDistinctFlag = 0x8000;
constexpr std::uint32_t kMaxAlphabet = 256;

void put_be(std::vector<std::uint8_t>& out, std::uint64_t v, unsigned bytes) {
    for (unsigned k = bytes; k-- > 0;) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
    }
}

std::uint64_t get_be(std::span<const std::uint8_t> in, std::size_t at, unsigned bytes) {
    std::uint64_t v = 0;
    for (unsigned k = 0; k < bytes; ++k) {
        v = (v << 8) | in[at + k];
    }
    return v;
}

bool uses_ell(Algorithm a) { return a == Algorithm::LengthRestricted; }
bool uses_costs(Algorithm a) { return a == Algorithm::UnequalCost; }
bool is_static(Algorithm a) { return a == Algorithm::StaticShannon || a == Algorithm::StaticHuffman; }

// Calls f with a fresh coder for the dynamic algorithm in p.
template <typename F>
void with_dynamic_coder(const CodecParams& p, F&& f) {
    switch (p.algorithm) {
        case Algorithm::SimpleDynamicShannon: {
            SimpleDynamicShannon c(p.alphabet_size);
            f(c);
            return;
        }
        case Algorithm::DynamicShannon: {
            DynamicShannonCoder c(p.alphabet_size);
            f(c);
            return;
        }
        case Algorithm::LengthRestricted: {
            LengthRestrictedCoder c(p.alphabet_size, RestrictedParams{p.ell, p.distinct_mode});
            f(c);
            return;
        }
        case Algorithm::Alphabetic: {
            AlphabeticCoder c(p.alphabet_size);
            f(c);
            return;
        }
        case Algorithm::UnequalCost: {
            UnequalCostCoder c(p.alphabet_size, CostModel(p.cost0, p.cost1));
            f(c);
            return;
        }
        default:
            throw InvalidArgument("not a dynamic algorithm");
    }
}

template <typename Coder>
std::uint64_t touches_of(const Coder& c) {
    if constexpr (requires { c.node_touches(); }) {
        return c.node_touches();
    } else {
        return 0;
    }
}

class SpanBuf : public std::streambuf {
public:
    explicit SpanBuf(std::span<const std::uint8_t> bytes) {
        auto* p = const_cast<char*>(reinterpret_cast<const char*>(bytes.data()));
        setg(p, p, p + bytes.size());
    }
};

}  // namespace

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> all = {
        Algorithm::StaticShannon,   Algorithm::StaticHuffman,    Algorithm::SimpleDynamicShannon,
        Algorithm::DynamicShannon,  Algorithm::LengthRestricted, Algorithm::Alphabetic,
        Algorithm::UnequalCost,
    };
    return all;
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::StaticShannon: return "static-shannon";
        case Algorithm::StaticHuffman: return "static-huffman";
        case Algorithm::SimpleDynamicShannon: return "simple-dynamic-shannon";
        case Algorithm::DynamicShannon: return "dynamic-shannon";
        case Algorithm::LengthRestricted: return "length-restricted";
        case Algorithm::Alphabetic: return "alphabetic";
        case Algorithm::UnequalCost: return "unequal-cost";
    }
    throw InvalidArgument("unknown algorithm id");
}

Algorithm algorithm_from_name(const std::string& name) {
    for (auto a : all_algorithms()) {
        if (algorithm_name(a) == name) {
            return a;
        }
    }
    throw InvalidArgument("unknown algorithm: " + name);
}

void validate(const CodecParams& p) {
    if (p.alphabet_size < 2 || p.alphabet_size > kMaxAlphabet) {
        throw InvalidArgument("alphabet size must be in [2, 256]");
    }
    if (uses_ell(p.algorithm) && (p.ell < 1 || p.ell > 32)) {
        throw InvalidArgument("ell must be in [1, 32]");
    }
    if (uses_costs(p.algorithm)) {
        CostModel check(p.cost0, p.cost1);
        (void)check;
    }
}

std::vector<std::uint8_t> ContainerHeader::serialize() const {
    std::vector<std::uint8_t> out(kMagic, kMagic + 4);
    out.push_back(static_cast<std::uint8_t>(params.algorithm));
    put_be(out, params.alphabet_size, 4);
    put_be(out, length, 8);
    std::uint16_t ell = 0;
    if (uses_ell(params.algorithm)) {
        ell = static_cast<std::uint16_t>(params.ell) | (params.distinct_mode ? kDistinctFlag : 0);
    }
    put_be(out, ell, 2);
    const double c0 = uses_costs(params.algorithm) ? params.cost0 : 0.0;
    const double c1 = uses_costs(params.algorithm) ? params.cost1 : 0.0;
    put_be(out, std::bit_cast<std::uint64_t>(c0), 8);
    put_be(out, std::bit_cast<std::uint64_t>(c1), 8);
    return out;
}

ContainerHeader ContainerHeader::parse(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kSize) {
        throw TruncatedStream();
    }
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw CorruptData("bad container magic");
    }
    ContainerHeader h;
    const auto id = bytes[4];
    if (id < 1 || id > 7) {
        throw CorruptData("unknown algorithm id");
    }
    h.params.algorithm = static_cast<Algorithm>(id);
    const auto n = get_be(bytes, 5, 4);
    if (n < 2 || n > kMaxAlphabet) {
        throw CorruptData("alphabet size out of range");
    }
    h.params.alphabet_size = static_cast<std::uint32_t>(n);
    h.length = get_be(bytes, 9, 8);
    const auto ell = static_cast<std::uint16_t>(get_be(bytes, 17, 2));
    const double c0 = std::bit_cast<double>(get_be(bytes, 19, 8));
    const double c1 = std::bit_cast<double>(get_be(bytes, 27, 8));
    if (uses_ell(h.params.algorithm)) {
        h.params.ell = ell & ~kDistinctFlag;
        h.params.distinct_mode = (ell & kDistinctFlag) != 0;
    } else if (ell != 0) {
        throw CorruptData("unused parameter field is nonzero");
    }
    if (uses_costs(h.params.algorithm)) {
        h.params.cost0 = c0;
        h.params.cost1 = c1;
    } else if (c0 != 0.0 || c1 != 0.0 || std::signbit(c0) || std::signbit(c1)) {
        throw CorruptData("unused parameter field is nonzero");
    }
    try {
        validate(h.params);
    } catch (const InvalidArgument& e) {
        throw CorruptData(std::string("invalid header parameters: ") + e.what());
    }
    return h;
}

EncodeStats encode_container(std::span<const Symbol> text, const CodecParams& params, std::ostream& out) {
    validate(params);
    for (auto s : text) {
        if (s >= params.alphabet_size) {
            throw InvalidArgument("symbol outside the declared alphabet");
        }
    }
    ContainerHeader h{params, text.size()};
    const auto head = h.serialize();
    out.write(reinterpret_cast<const char*>(head.data()), static_cast<std::streamsize>(head.size()));
    EncodeStats st;
    BitWriter w(out);
    if (is_static(params.algorithm)) {
        if (!text.empty()) {
            const auto algo = params.algorithm == Algorithm::StaticShannon ? StaticAlgorithm::Shannon
                                                                           : StaticAlgorithm::Huffman;
            const auto enc = encode_static(text, params.alphabet_size, algo);
            w.write(enc.preface);
            w.write(enc.body);
            st.preface_bits = enc.preface.size();
            st.body_bits = enc.body.size();
            st.body_cost = static_cast<long double>(st.body_bits);
            const auto lengths = static_lengths(FrequencyTable::of(text, params.alphabet_size), algo);
            for (const auto& l : lengths) {
                st.max_codeword_bits = std::max<std::uint64_t>(st.max_codeword_bits, l.length);
            }
        }
    } else {
        with_dynamic_coder(params, [&](auto& coder) {
            for (auto s : text) {
                const BitString cw = coder.encode(s);
                st.max_codeword_bits = std::max<std::uint64_t>(st.max_codeword_bits, cw.size());
                w.write(cw);
            }
            st.ops = touches_of(coder);
            if constexpr (requires { coder.total_cost(); }) {
                st.body_cost = coder.total_cost();
            }
        });
        st.body_bits = w.bits_written();
        if (!uses_costs(params.algorithm)) {
            st.body_cost = static_cast<long double>(st.body_bits);
        }
    }
    w.close();
    if (!out) {
        throw Error("write failed");
    }
    return st;
}

std::vector<std::uint8_t> encode_container(std::span<const Symbol> text, const CodecParams& params,
                                           EncodeStats* stats) {
    std::ostringstream out;
    const auto st = encode_container(text, params, out);
    if (stats != nullptr) {
        *stats = st;
    }
    const std::string s = std::move(out).str();
    return {s.begin(), s.end()};
}

ContainerHeader decode_container(std::istream& in, const std::function<void(Symbol)>& sink,
                                 const DecodeLimits& limits) {
    std::uint8_t head[ContainerHeader::kSize];
    in.read(reinterpret_cast<char*>(head), sizeof head);
    if (in.gcount() != static_cast<std::streamsize>(sizeof head)) {
        throw TruncatedStream();
    }
    const auto h = ContainerHeader::parse(head);
    if (h.length > limits.max_symbols) {
        throw CorruptData("message length exceeds the decoder limit");
    }
    const auto& p = h.params;
    BitReader r(*in.rdbuf());
    if (is_static(p.algorithm)) {
        if (h.length > 0) {
            const Preface pre = read_preface(r);
            if (pre.alphabet_size != p.alphabet_size) {
                throw CorruptData("preface alphabet differs from the header");
            }
            if (pre.lengths.empty()) {
                throw CorruptData("preface lists no symbols for a nonempty message");
            }
            CanonicalCode code;
            try {
                code.assign(pre.lengths);
            } catch (const InvalidArgument& e) {
                throw CorruptData(std::string("invalid preface: ") + e.what());
            }
            for (std::uint64_t i = 0; i < h.length; ++i) {
                sink(code.decode(r));
            }
        }
    } else {
        with_dynamic_coder(p, [&](auto& coder) {
            for (std::uint64_t i = 0; i < h.length; ++i) {
                sink(coder.decode(r));
            }
        });
    }
    if (r.remaining_in_byte_value() != 0) {
        throw CorruptData("nonzero padding bits");
    }
    if (!r.at_byte_end()) {
        throw CorruptData("trailing data after the message");
    }
    return h;
}

std::vector<Symbol> decode_container(std::span<const std::uint8_t> bytes, const DecodeLimits& limits,
                                     ContainerHeader* header) {
    SpanBuf buf(bytes);
    std::istream in(&buf);
    std::vector<Symbol> out;
    const auto h = decode_container(in, [&](Symbol s) { out.push_back(s); }, limits);
    if (header != nullptr) {
        *header = h;
    }
    return out;
}

}  // namespace dsc
