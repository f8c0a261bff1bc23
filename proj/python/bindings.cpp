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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dsc/codec.hpp"
#include "dsc/errors.hpp"
#include "dsc/stats.hpp"
#include "dsc/unequal_cost.hpp"
#include "dsc/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

std::vector<dsc::Symbol> symbols_of(const py::handle& data) {
    if (py::isinstance<py::bytes>(data) || py::isinstance<py::bytearray>(data)) {
        const std::string raw = py::isinstance<py::bytes>(data) ? data.cast<std::string>()
                                                                 : std::string(py::bytearray(data.cast<py::bytearray>()));
        return {raw.begin(), raw.end()};
    }
    std::vector<dsc::Symbol> out;
    for (auto item : data) {
        const auto v = item.cast<long long>();
        if (v < 0 || v > 0xffffffffLL) {
            throw dsc::InvalidArgument("symbol out of range");
        }
        out.push_back(static_cast<dsc::Symbol>(v));
    }
    return out;
}

dsc::CodecParams params_of(const std::string& algo, std::uint32_t n, unsigned ell, bool distinct_mode, double cost0,
                           double cost1) {
    dsc::CodecParams p;
    p.algorithm = dsc::algorithm_from_name(algo);
    p.alphabet_size = n;
    p.ell = ell;
    p.distinct_mode = distinct_mode;
    p.cost0 = cost0;
    p.cost1 = cost1;
    return p;
}

py::bytes to_bytes(const std::vector<std::uint8_t>& v) {
    return {reinterpret_cast<const char*>(v.data()), v.size()};
}

py::dict stats_dict(const dsc::EncodeStats& st) {
    return py::dict("preface_bits"_a = st.preface_bits, "body_bits"_a = st.body_bits,
                    "body_cost"_a = static_cast<double>(st.body_cost), "ops"_a = st.ops,
                    "max_codeword_bits"_a = st.max_codeword_bits);
}

py::dict code_dict(const dsc::CodeAssignment& code) {
    py::dict out;
    for (const auto& [s, bits] : code) {
        out[py::int_(s)] = bits.to_string();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dynamic Shannon coding";

    py::register_exception<dsc::Error>(m, "Error", PyExc_ValueError);

    m.def("algorithms", [] {
        std::vector<std::string> out;
        for (auto a : dsc::all_algorithms()) {
            out.push_back(dsc::algorithm_name(a));
        }
        return out;
    });

    m.def(
        "encode",
        [](const py::object& data, const std::string& algo, std::uint32_t alphabet_size, unsigned ell,
           bool distinct_mode, double cost0, double cost1) {
            const auto text = symbols_of(data);
            const auto p = params_of(algo, alphabet_size, ell, distinct_mode, cost0, cost1);
            dsc::EncodeStats st;
            std::vector<std::uint8_t> bytes;
            {
                py::gil_scoped_release release;
                bytes = dsc::encode_container(text, p, &st);
            }
            return py::make_tuple(to_bytes(bytes), stats_dict(st));
        },
        "data"_a, "algo"_a = "dynamic-shannon", "alphabet_size"_a = 256, "ell"_a = 1, "distinct_mode"_a = false,
        "cost0"_a = 1.0, "cost1"_a = 1.0,
        "Encode bytes or a sequence of symbols into a container. Returns (container, stats).");

    m.def(
        "decode",
        [](const py::bytes& container, std::uint64_t max_symbols) {
            const std::string raw = container;
            const std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
            dsc::DecodeLimits limits;
            limits.max_symbols = max_symbols;
            std::vector<dsc::Symbol> text;
            {
                py::gil_scoped_release release;
                text = dsc::decode_container(bytes, limits);
            }
            return text;
        },
        "container"_a, "max_symbols"_a = std::uint64_t{1} << 40, "Decode a container into a list of symbols.");

    m.def(
        "entropy",
        [](const py::object& data, std::uint32_t alphabet_size) {
            const auto text = symbols_of(data);
            return static_cast<double>(dsc::empirical_entropy(text, alphabet_size));
        },
        "data"_a, "alphabet_size"_a = 256, "Order-0 empirical entropy in bits per character.");

    m.def(
        "theorem_bound",
        [](const std::string& algo, const py::object& data, std::uint32_t alphabet_size, unsigned ell,
           bool distinct_mode, double cost0, double cost1) {
            const auto text = symbols_of(data);
            const dsc::TheoremParams p{alphabet_size, ell, distinct_mode, cost0, cost1};
            const auto b = dsc::theorem_rhs(dsc::theorem_for(algo), text, p);
            return py::dict("steps"_a = static_cast<double>(b.steps), "proof"_a = static_cast<double>(b.proof),
                            "entropy"_a = static_cast<double>(b.entropy));
        },
        "algo"_a, "data"_a, "alphabet_size"_a = 256, "ell"_a = 1, "distinct_mode"_a = false, "cost0"_a = 1.0,
        "cost1"_a = 1.0);

    m.def("capacity", &dsc::capacity_solve, "cost0"_a, "cost1"_a,
          "Largest root of e^(-cost0 C) + e^(-cost1 C) = 1.");

    m.def(
        "shannon_code",
        [](const py::object& data, std::uint32_t alphabet_size) {
            const auto text = symbols_of(data);
            return code_dict(dsc::shannon_code(dsc::FrequencyTable::of(text, alphabet_size)));
        },
        "data"_a, "alphabet_size"_a = 256);
    m.def(
        "huffman_code",
        [](const py::object& data, std::uint32_t alphabet_size) {
            const auto text = symbols_of(data);
            return code_dict(dsc::huffman_code(dsc::FrequencyTable::of(text, alphabet_size)));
        },
        "data"_a, "alphabet_size"_a = 256);

    m.def(
        "verify",
        [](const py::object& data, std::uint32_t alphabet_size, unsigned ell, bool distinct_mode, double cost0,
           double cost1) {
            const auto text = symbols_of(data);
            const dsc::VerifyOptions opt{ell, distinct_mode, cost0, cost1};
            py::list out;
            for (const auto& r : dsc::verify_text(text, alphabet_size, opt)) {
                out.append(py::dict("algo"_a = r.algorithm, "m"_a = r.m, "n"_a = r.n,
                                    "entropy"_a = static_cast<double>(r.entropy),
                                    "measured"_a = static_cast<double>(r.measured),
                                    "bound"_a = static_cast<double>(r.bound), "pass"_a = r.pass, "ops"_a = r.ops));
            }
            return out;
        },
        "data"_a, "alphabet_size"_a = 256, "ell"_a = 1, "distinct_mode"_a = false, "cost0"_a = 1.0, "cost1"_a = 2.0,
        "Encode with every algorithm and compare each result with its bound.");
}
