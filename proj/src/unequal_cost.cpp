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
#include "dsc/unequal_cost.hpp"

#include <algorithm>
#include <cmath>

namespace dsc {

namespace {

constexpr std::size_t kMaxCodewordBits = 4096;

long double residual(long double x, long double c0, long double c1) {
    return std::exp(-c0 * x) + std::exp(-c1 * x) - 1.0L;
}

// B / total < bound, evaluated in long double on both encoder and decoder.
bool below(std::uint64_t b, long double bound, std::uint64_t total) {
    return static_cast<long double>(b) < bound * static_cast<long double>(total);
}

}  // namespace

double capacity_solve(double cost0, double cost1) {
    if (!(cost0 > 0.0) || !(cost1 > 0.0) || !std::isfinite(cost0) || !std::isfinite(cost1)) {
        throw InvalidArgument("letter costs must be positive and finite");
    }
    if (cost0 > cost1) {
        std::swap(cost0, cost1);
    }
    const long double c0 = cost0;
    const long double c1 = cost1;
    // g(x) = e^(-c0 x) + e^(-c1 x) - 1 decreases; g(ln2/c1) >= 0 >= g(ln2/c0).
    long double lo = std::log(2.0L) / c1;
    long double hi = std::log(2.0L) / c0;
    for (int it = 0; it < 200 && hi - lo > 1e-15L * hi; ++it) {
        const long double mid = (lo + hi) / 2;
        if (residual(mid, c0, c1) > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    long double x = (lo + hi) / 2;
    for (int it = 0; it < 4; ++it) {
        const long double d = -c0 * std::exp(-c0 * x) - c1 * std::exp(-c1 * x);
        const long double next = x - residual(x, c0, c1) / d;
        if (!(next >= lo && next <= hi)) {
            break;
        }
        x = next;
    }
    return static_cast<double>(x);
}

CostModel::CostModel(double cost0, double cost1) : cost0_(cost0), cost1_(cost1) {
    if (!(cost0 > 0.0) || !(cost1 > 0.0) || !std::isfinite(cost0) || !std::isfinite(cost1)) {
        throw InvalidArgument("letter costs must be positive and finite");
    }
    if (cost0 > cost1) {
        throw InvalidArgument("cost0 must not exceed cost1");
    }
    capacity_ = capacity_solve(cost0, cost1);
    p0_ = std::exp(-static_cast<long double>(cost0) * capacity_);
}

double CostModel::cost(const BitString& bits) const {
    double c = 0.0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        c += bit_cost(bits[i]);
    }
    return c;
}

BitString krause_walk(const KrausePoint& pt, const CostModel& model, KrauseTrace* trace) {
    BitString out;
    long double x = 0.0L;
    long double y = 1.0L;
    double cost = 0.0;
    const long double p0 = model.p0();
    for (;;) {
        const bool prev_out = !pt.prev_before || below(*pt.prev_before, x, pt.total);
        const bool next_out = !pt.next_before || !below(*pt.next_before, y, pt.total);
        if (prev_out && next_out) {
            return out;
        }
        if (out.size() >= kMaxCodewordBits) {
            throw Error("unequal-cost codeword exceeds the length limit");
        }
        const long double split = x + p0 * (y - x);
        if (!(x < split && split < y)) {
            throw Error("interval precision exhausted");
        }
        const bool bit = !below(pt.before, split, pt.total);
        if (bit) {
            x = split;
        } else {
            y = split;
        }
        out.push_back(bit);
        cost += model.bit_cost(bit);
        if (trace != nullptr) {
            trace->widths.push_back(y - x);
            trace->costs.push_back(cost);
        }
    }
}

KrauseContext::KrauseContext(std::vector<std::pair<std::uint32_t, std::uint64_t>> counts) {
    std::erase_if(counts, [](const auto& e) { return e.second == 0; });
    std::sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    for (std::size_t i = 1; i < counts.size(); ++i) {
        if (counts[i].first == counts[i - 1].first && counts[i].second == counts[i - 1].second) {
            throw InvalidArgument("duplicate label in Krause context");
        }
    }
    order_ = std::move(counts);
    before_.reserve(order_.size());
    for (const auto& [label, c] : order_) {
        before_.push_back(total_);
        total_ += c;
    }
}

KrausePoint KrauseContext::point(std::uint32_t label) const {
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (order_[i].first == label) {
            KrausePoint pt{before_[i], std::nullopt, std::nullopt, total_};
            if (i > 0) {
                pt.prev_before = before_[i - 1];
            }
            if (i + 1 < order_.size()) {
                pt.next_before = before_[i + 1];
            }
            return pt;
        }
    }
    throw InvalidArgument("label has no occurrences in the context");
}

BitString krause_codeword(const KrauseContext& ctx, const CostModel& model, std::uint32_t label,
                          KrauseTrace* trace) {
    return krause_walk(ctx.point(label), model, trace);
}

std::vector<std::pair<std::uint32_t, BitString>> krause_code(const KrauseContext& ctx, const CostModel& model) {
    std::vector<std::pair<std::uint32_t, BitString>> out;
    out.reserve(ctx.order().size());
    for (const auto& [label, c] : ctx.order()) {
        out.emplace_back(label, krause_codeword(ctx, model, label));
    }
    return out;
}

UnequalCostCoder::UnequalCostCoder(std::uint32_t alphabet_size, const CostModel& model)
    : n_(alphabet_size), model_(model), list_(alphabet_size + 1) {
    if (n_ < 2) {
        throw InvalidArgument("alphabet size must be at least 2");
    }
    list_.increment(escape_label());
}

KrausePoint UnequalCostCoder::point(std::uint32_t label) {
    KrausePoint pt{list_.before(label), std::nullopt, std::nullopt, list_.total()};
    if (auto prev = list_.previous(label)) {
        pt.prev_before = prev->before;
    }
    const std::uint64_t next = pt.before + list_.get(label);
    if (next < pt.total) {
        pt.next_before = next;
    }
    return pt;
}

BitString UnequalCostCoder::encode(Symbol s) {
    if (s >= n_) {
        throw InvalidArgument("symbol outside the alphabet");
    }
    BitString out;
    if (list_.contains(s)) {
        out = krause_walk(point(s), model_);
    } else {
        out = krause_walk(point(escape_label()), model_);
        out.append(index_bits(s, n_));
    }
    total_cost_ += model_.cost(out);
    list_.increment(s);
    ++position_;
    return out;
}

void UnequalCostCoder::encode(Symbol s, BitWriter& out) { out.write(encode(s)); }

Symbol UnequalCostCoder::decode(BitReader& src) {
    const std::uint64_t total = list_.total();
    const long double p0 = model_.p0();
    long double x = 0.0L;
    long double y = 1.0L;
    double cost = 0.0;
    std::uint32_t label = 0;
    for (std::size_t bits = 0;; ++bits) {
        const long double xm = x * static_cast<long double>(total);
        const std::uint64_t t = xm <= 0.0L ? 0 : static_cast<std::uint64_t>(std::ceil(xm));
        const auto e = list_.first_at_or_after(t);
        if (!e || !below(e->before, y, total)) {
            throw CorruptData("bit pattern matches no unequal-cost codeword");
        }
        const std::uint64_t next = e->before + e->freq;
        if (next >= total || !below(next, y, total)) {
            label = e->symbol;
            break;
        }
        if (bits >= kMaxCodewordBits) {
            throw CorruptData("unequal-cost codeword exceeds the length limit");
        }
        const long double split = x + p0 * (y - x);
        if (!(x < split && split < y)) {
            throw CorruptData("interval precision exhausted");
        }
        const bool bit = src.read_bit();
        if (bit) {
            x = split;
        } else {
            y = split;
        }
        cost += model_.bit_cost(bit);
    }
    Symbol s = label;
    if (label == escape_label()) {
        const unsigned w = index_width(n_);
        const auto j = src.read_uint(w);
        if (j >= n_ || list_.contains(static_cast<std::uint32_t>(j))) {
            throw CorruptData("escape followed by an invalid symbol index");
        }
        cost += model_.cost(index_bits(j, n_));
        s = static_cast<Symbol>(j);
    }
    total_cost_ += cost;
    list_.increment(s);
    ++position_;
    return s;
}

}  // namespace dsc
