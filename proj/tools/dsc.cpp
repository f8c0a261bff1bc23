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
// Command-line codec and bound checker.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "dsc/codec.hpp"
#include "dsc/errors.hpp"
#include "dsc/stats.hpp"
#include "dsc/verify.hpp"

namespace {

struct EncodeArgs {
    std::string input;
    std::string output;
    std::string algo = "dynamic-shannon";
    unsigned ell = 1;
    double cost0 = 1.0;
    double cost1 = 1.0;
    bool distinct_mode = false;
    std::uint32_t alphabet_size = 256;
    std::string report;
};

dsc::BoundReport report_for(const std::vector<dsc::Symbol>& text, const dsc::CodecParams& p,
                            const dsc::EncodeStats& st) {
    const auto table = dsc::FrequencyTable::of(text, p.alphabet_size);
    dsc::BoundReport r;
    r.algorithm = dsc::algorithm_name(p.algorithm);
    r.m = text.size();
    r.n = p.alphabet_size;
    r.entropy = dsc::empirical_entropy(table);
    r.measured = st.body_cost;
    r.ops = st.ops;
    if (p.algorithm == dsc::Algorithm::StaticShannon || p.algorithm == dsc::Algorithm::StaticHuffman) {
        r.bound = static_cast<long double>(dsc::static_shannon_bound(table));
    } else {
        dsc::TheoremParams tp{p.alphabet_size, p.ell, p.distinct_mode, p.cost0, p.cost1};
        r.bound = dsc::theorem_rhs(dsc::theorem_for(r.algorithm), text, tp).entropy;
    }
    r.pass = r.measured <= r.bound;
    return r;
}

int run_encode(const EncodeArgs& a) {
    dsc::CodecParams p;
    p.algorithm = dsc::algorithm_from_name(a.algo);
    p.alphabet_size = a.alphabet_size;
    p.ell = a.ell;
    p.distinct_mode = a.distinct_mode;
    p.cost0 = a.cost0;
    p.cost1 = a.cost1;
    const auto text = dsc::read_bytes(a.input);
    std::ofstream out(a.output, std::ios::binary);
    if (!out) {
        throw dsc::Error("cannot open " + a.output);
    }
    const auto st = dsc::encode_container(text, p, out);
    out.close();
    if (!out) {
        throw dsc::Error("write failed: " + a.output);
    }
    const auto r = report_for(text, p, st);
    std::cout << std::fixed << std::setprecision(6);
    std::cout << "algo " << r.algorithm << "\n"
              << "m " << r.m << "\n"
              << "preface_bits " << st.preface_bits << "\n"
              << "bits " << st.body_bits << "\n";
    if (p.algorithm == dsc::Algorithm::UnequalCost) {
        std::cout << "cost " << static_cast<double>(st.body_cost) << "\n";
    }
    std::cout << "H " << static_cast<double>(r.entropy) << "\n"
              << "bound " << static_cast<double>(r.bound) << "\n"
              << "pass " << (r.pass ? "true" : "false") << "\n";
    if (!a.report.empty()) {
        std::ofstream csv(a.report);
        dsc::write_csv_header(csv);
        dsc::write_csv_row(csv, r);
    }
    return r.pass ? 0 : 1;
}

int run_decode(const std::string& input, const std::string& output, std::uint64_t max_symbols) {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
        throw dsc::Error("cannot open " + input);
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        throw dsc::Error("cannot open " + output);
    }
    dsc::DecodeLimits limits;
    limits.max_symbols = max_symbols;
    dsc::decode_container(in, [&](dsc::Symbol s) { out.put(static_cast<char>(s)); }, limits);
    out.close();
    if (!out) {
        throw dsc::Error("write failed: " + output);
    }
    return 0;
}

int run_verify(const std::string& corpus, const dsc::VerifyOptions& options, const std::string& report) {
    std::vector<dsc::NamedText> inputs;
    if (!corpus.empty()) {
        inputs = dsc::load_corpus(corpus);
    }
    for (auto& t : dsc::synthetic_corpus()) {
        inputs.push_back(std::move(t));
    }
    std::ofstream file;
    std::ostream* csv = &std::cout;
    if (!report.empty()) {
        file.open(report);
        if (!file) {
            throw dsc::Error("cannot open " + report);
        }
        csv = &file;
    }
    dsc::write_csv_header(*csv);
    std::size_t failures = 0;
    for (const auto& t : inputs) {
        for (const auto& r : dsc::verify_text(t.text, t.alphabet_size, options)) {
            dsc::write_csv_row(*csv, r);
            if (!r.pass) {
                ++failures;
                std::cerr << "bound violation: " << t.name << " " << r.algorithm << "\n";
            }
        }
    }
    std::cerr << inputs.size() << " inputs, " << failures << " violations\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic Shannon coding: encode, decode and check bounds"};
    app.require_subcommand(1);

    EncodeArgs enc;
    auto* encode = app.add_subcommand("encode", "Encode a file into a container");
    encode->add_option("input", enc.input, "Input file")->required()->check(CLI::ExistingFile);
    encode->add_option("output", enc.output, "Output container")->required();
    encode->add_option("--algo", enc.algo, "Algorithm")
        ->check(CLI::IsMember({"static-shannon", "static-huffman", "simple-dynamic-shannon", "dynamic-shannon",
                               "length-restricted", "alphabetic", "unequal-cost"}));
    encode->add_option("--ell", enc.ell, "Length restriction slack")->check(CLI::Range(1, 32));
    encode->add_option("--cost0", enc.cost0, "Cost of a 0 bit");
    encode->add_option("--cost1", enc.cost1, "Cost of a 1 bit");
    encode->add_flag("--distinct-mode", enc.distinct_mode, "Cap lengths by the distinct symbols seen");
    encode->add_option("--alphabet-size", enc.alphabet_size, "Alphabet size n")->check(CLI::Range(2, 256));
    encode->add_option("--report", enc.report, "Write a CSV report row");

    std::string dec_in;
    std::string dec_out;
    std::uint64_t max_symbols = std::uint64_t{1} << 40;
    auto* decode = app.add_subcommand("decode", "Decode a container");
    decode->add_option("input", dec_in, "Input container")->required()->check(CLI::ExistingFile);
    decode->add_option("output", dec_out, "Output file")->required();
    decode->add_option("--max-symbols", max_symbols, "Reject containers declaring more symbols");

    std::string corpus;
    std::string report;
    dsc::VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Run every algorithm on a corpus and synthetic inputs");
    verify->add_option("corpus", corpus, "Corpus directory")->check(CLI::ExistingDirectory);
    verify->add_option("--report", report, "CSV output path (default stdout)");
    verify->add_option("--ell", vopt.ell, "Length restriction slack")->check(CLI::Range(1, 32));
    verify->add_option("--cost0", vopt.cost0, "Cost of a 0 bit");
    verify->add_option("--cost1", vopt.cost1, "Cost of a 1 bit");
    verify->add_flag("--distinct-mode", vopt.distinct_mode, "Cap lengths by the distinct symbols seen");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*encode) {
            return run_encode(enc);
        }
        if (*decode) {
            return run_decode(dec_in, dec_out, max_symbols);
        }
        return run_verify(corpus, vopt, report);
    } catch (const dsc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
