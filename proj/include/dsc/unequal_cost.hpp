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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dsc/bitio.hpp"
#include "dsc/partial_sums.hpp"
#include "dsc/static_codes.hpp"

namespace dsc {

/// Largest real root of e^(-cost0 x) + e^(-cost1 x) = 1.
double capacity_solve(double cost0, double cost1);

/// Letter costs for the code alphabet {0, 1} and the channel capacity C.
class CostModel {
public:
    CostModel(double cost0, double cost1);

    double cost0() const { return cost0_; }
    double cost1() const { return cost1_; }
    double capacity() const { return capacity_; }
    /// Fraction of an interval taken by bit 0, e^(-cost0 C).
    long double p0() const { return p0_; }
    double bit_cost(bool bit) const { return bit ? cost1_ : cost0_; }
    double cost(const BitString& bits) const;

private:
    double cost0_;
    double cost1_;
    double capacity_;
    long double p0_;
};

/// Position of a symbol in the frequency-ordered list: f = before / total.
/// `prev_before` and `next_before` locate the neighbouring f-values.
struct KrausePoint {
    std::uint64_t before;
    std::optional<std::uint64_t> prev_before;
    std::optional<std::uint64_t> next_before;
    std::uint64_t total;
};

struct KrauseTrace {
    std::vector<long double> widths;  // y_j - x_j after each bit
    std::vector<double> costs;        // cumulative cost after each bit
};

/// Shortest prefix whose interval contains f and no neighbouring f-value.
BitString krause_walk(const KrausePoint& point, const CostModel& model, KrauseTrace* trace = nullptr);

/// Static context: symbols ordered by non-increasing frequency, ties by
/// ascending label. Labels with count 0 are dropped.
class KrauseContext {
public:
    explicit KrauseContext(std::vector<std::pair<std::uint32_t, std::uint64_t>> counts);

    const std::vector<std::pair<std::uint32_t, std::uint64_t>>& order() const { return order_; }
    std::uint64_t total() const { return total_; }
    KrausePoint point(std::uint32_t label) const;

private:
    std::vector<std::pair<std::uint32_t, std::uint64_t>> order_;
    std::vector<std::uint64_t> before_;
    std::uint64_t total_ = 0;
};

BitString krause_codeword(const KrauseContext& ctx, const CostModel& model, std::uint32_t label,
                          KrauseTrace* trace = nullptr);
/// Codewords for every label in ctx, in list order.
std::vector<std::pair<std::uint32_t, BitString>> krause_code(const KrauseContext& ctx, const CostModel& model);

/// Dynamic coding with unequal letter costs: Krause codewords over the
/// escape-prefixed history, one codeword computed per character.
class UnequalCostCoder {
public:
    UnequalCostCoder(std::uint32_t alphabet_size, const CostModel& model);

    BitString encode(Symbol s);
    void encode(Symbol s, BitWriter& out);
    Symbol decode(BitReader& src);

    std::uint32_t alphabet_size() const { return n_; }
    std::uint64_t position() const { return position_; }
    const CostModel& model() const { return model_; }
    /// Total cost of everything encoded or decoded so far.
    double total_cost() const { return total_cost_; }
    std::uint64_t count(Symbol s) const { return list_.get(s); }
    std::uint32_t escape_label() const { return n_; }
    FreqOrderList& list() { return list_; }
    std::uint64_t node_touches() const { return list_.touches(); }

private:
    KrausePoint point(std::uint32_t label);

    std::uint32_t n_;
    CostModel model_;
    FreqOrderList list_;
    std::uint64_t position_ = 1;
    double total_cost_ = 0.0;
};

}  // namespace dsc
