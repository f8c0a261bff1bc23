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
#include "dsc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>

namespace dsc {

std::vector<Symbol> uniform_text(std::uint64_t m, std::uint32_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Symbol> pick(0, n - 1);
    std::vector<Symbol> out(m);
    for (auto& s : out) {
        s = pick(rng);
    }
    return out;
}

std::vector<Symbol> zipf_text(std::uint64_t m, std::uint32_t n, double s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Symbol> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> w(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        w[k] = 1.0 / std::pow(static_cast<double>(k + 1), s);
    }
    std::discrete_distribution<std::uint32_t> pick(w.begin(), w.end());
    std::vector<Symbol> out(m);
    for (auto& x : out) {
        x = perm[pick(rng)];
    }
    return out;
}

std::vector<Symbol> single_symbol_text(std::uint64_t m, Symbol a) { return std::vector<Symbol>(m, a); }

std::vector<Symbol> all_distinct_text(std::uint32_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Symbol> out(n);
    std::iota(out.begin(), out.end(), 0);
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

std::vector<BoundReport> verify_text(std::span<const Symbol> text, std::uint32_t alphabet_size,
                                     const VerifyOptions& options) {
    const auto table = FrequencyTable::of(text, alphabet_size);
    const long double h = empirical_entropy(table);
    std::vector<BoundReport> out;
    for (auto algo : all_algorithms()) {
        CodecParams p;
        p.algorithm = algo;
        p.alphabet_size = alphabet_size;
        p.ell = options.ell;
        p.distinct_mode = options.distinct_mode;
        p.cost0 = options.cost0;
        p.cost1 = options.cost1;
        EncodeStats st;
        const auto bytes = encode_container(text, p, &st);
        bool roundtrip = false;
        try {
            DecodeLimits limits;
            limits.max_symbols = text.size();
            const auto back = decode_container(bytes, limits);
            roundtrip = std::equal(back.begin(), back.end(), text.begin(), text.end());
        } catch (const Error&) {
            roundtrip = false;
        }
        BoundReport r;
        r.algorithm = algorithm_name(algo);
        r.m = text.size();
        r.n = alphabet_size;
        r.entropy = h;
        r.measured = st.body_cost;
        r.ops = st.ops;
        if (algo == Algorithm::StaticShannon || algo == Algorithm::StaticHuffman) {
            r.bound = static_cast<long double>(static_shannon_bound(table));
        } else {
            TheoremParams tp;
            tp.alphabet_size = alphabet_size;
            tp.ell = options.ell;
            tp.distinct_mode = options.distinct_mode;
            tp.cost0 = options.cost0;
            tp.cost1 = options.cost1;
            r.bound = theorem_rhs(theorem_for(r.algorithm), text, tp).entropy;
        }
        r.pass = roundtrip && r.measured <= r.bound;
        out.push_back(r);
    }
    return out;
}

std::vector<NamedText> synthetic_corpus() {
    constexpr std::uint32_t n = 256;
    std::vector<NamedText> out;
    out.push_back({"uniform", n, uniform_text(20000, n, 1)});
    out.push_back({"zipf-1.2", n, zipf_text(20000, n, 1.2, 2)});
    out.push_back({"single-symbol", n, single_symbol_text(10000, 'a')});
    out.push_back({"all-distinct", n, all_distinct_text(n, 3)});
    return out;
}

std::vector<Symbol> read_bytes(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + file.string());
    }
    std::vector<Symbol> out;
    for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
        out.push_back(static_cast<unsigned char>(*it));
    }
    if (in.bad()) {
        throw Error("read failed: " + file.string());
    }
    return out;
}

std::vector<NamedText> load_corpus(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
        if (e.is_regular_file()) {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<NamedText> out;
    for (const auto& f : files) {
        out.push_back({f.string(), 256, read_bytes(f)});
    }
    return out;
}

}  // namespace dsc
