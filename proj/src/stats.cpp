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
#include "dsc/stats.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "dsc/exact.hpp"
#include "dsc/length_restricted.hpp"
#include "dsc/unequal_cost.hpp"

namespace dsc {

namespace {

constexpr std::uint64_t kExactFactorialLimit = 100000;
constexpr long double kChainTolerance = 1e-9L;

long double lg(long double x) { return std::log2(x); }

long double capacity_of(double cost0, double cost1) {
    thread_local double last0 = 0;
    thread_local double last1 = 0;
    thread_local long double last = 0;
    if (cost0 != last0 || cost1 != last1 || last == 0) {
        last = CostModel(cost0, cost1).capacity();
        last0 = cost0;
        last1 = cost1;
    }
    return last;
}

bool le(long double a, long double b) { return a <= b + kChainTolerance * (1.0L + std::fabs(b)); }

FrequencyTable table_of(std::span<const Symbol> text, std::uint32_t alphabet_size) {
    FrequencyTable f;
    f.alphabet_size = alphabet_size;
    f.counts.assign(alphabet_size, 0);
    for (auto s : text) {
        if (s >= alphabet_size) {
            throw InvalidArgument("symbol outside the alphabet");
        }
        ++f.counts[s];
    }
    f.total = text.size();
    return f;
}

}  // namespace

long double empirical_entropy(const FrequencyTable& f) {
    if (f.total == 0) {
        return 0;
    }
    const long double m = static_cast<long double>(f.total);
    long double h = 0;
    for (auto c : f.counts) {
        if (c > 0) {
            h += (static_cast<long double>(c) / m) * lg(m / static_cast<long double>(c));
        }
    }
    return h;
}

long double empirical_entropy(std::span<const Symbol> text, std::uint32_t alphabet_size) {
    return empirical_entropy(table_of(text, alphabet_size));
}

long double log2_factorial(std::uint64_t x) {
    if (x > kExactFactorialLimit) {
        return std::lgamma(static_cast<long double>(x) + 1.0L) / std::log(2.0L);
    }
    // Kahan summation of log2 k.
    long double sum = 0;
    long double comp = 0;
    for (std::uint64_t k = 2; k <= x; ++k) {
        const long double y = lg(static_cast<long double>(k)) - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

std::uint64_t static_shannon_bound(const FrequencyTable& f) {
    std::uint64_t bits = 0;
    for (auto c : f.counts) {
        if (c > 0) {
            bits += c * static_cast<std::uint64_t>(ceil_log2_ratio(f.total, c));
        }
    }
    return bits;
}

Lemma1Chain lemma1_sides(std::span<const Symbol> text, std::uint32_t alphabet_size) {
    Lemma1Chain r;
    const auto f = table_of(text, alphabet_size);
    std::vector<std::uint64_t> seen(alphabet_size, 0);
    for (std::size_t k = 0; k < text.size(); ++k) {
        const auto i = static_cast<long double>(k + 1);
        const auto c = seen[text[k]]++;
        if (c > 0) {
            r.sum_log_positions += lg(i);
            r.sum_log_previous += lg(static_cast<long double>(c));
            r.lhs += lg(i / static_cast<long double>(c));
        }
    }
    r.log_m_factorial = log2_factorial(text.size());
    for (auto c : f.counts) {
        if (c > 0) {
            r.sum_log_factorials += log2_factorial(c);
            r.sum_log_counts += lg(static_cast<long double>(c));
        }
    }
    r.multinomial = r.log_m_factorial - r.sum_log_factorials;
    r.factorial_form = r.multinomial + r.sum_log_counts;
    r.entropy_m = empirical_entropy(f) * static_cast<long double>(text.size());
    r.entropy_form = r.entropy_m + r.sum_log_counts;
    // Σ_R log i <= log m!; Σ_R log # = Σ_a (log #a! - log #a); multinomial <= H m.
    const bool positions = le(r.sum_log_positions, r.log_m_factorial);
    const long double prev_identity = r.sum_log_factorials - r.sum_log_counts;
    const bool previous = std::fabs(r.sum_log_previous - prev_identity) <=
                          kChainTolerance * (1.0L + std::fabs(prev_identity));
    r.holds = positions && previous && le(r.lhs, r.factorial_form) && le(r.multinomial, r.entropy_m) &&
              le(r.factorial_form, r.entropy_form);
    return r;
}

SlackSides slack_sides(std::span<const Symbol> text, std::uint32_t alphabet_size, std::uint64_t n) {
    SlackSides r;
    std::vector<std::uint64_t> seen(alphabet_size, 0);
    std::uint64_t max_r = 0;
    const auto ln = static_cast<long double>(n);
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] >= alphabet_size) {
            throw InvalidArgument("symbol outside the alphabet");
        }
        const auto c = seen[text[k]]++;
        if (c > 0) {
            const auto i = static_cast<long double>(k + 1);
            r.lhs += lg((i + ln) / static_cast<long double>(c));
            r.base += lg(i / static_cast<long double>(c));
            max_r = k + 1;
        }
    }
    r.slack_term = max_r == 0 ? 0 : ln * lg(static_cast<long double>(max_r) + ln);
    r.rhs = r.base + r.slack_term;
    r.holds = le(r.lhs, r.rhs);
    return r;
}

long double step_bound(TheoremId id, std::uint64_t i, std::uint64_t count, std::uint64_t distinct,
                       const TheoremParams& p) {
    const std::uint64_t n = p.alphabet_size;
    const auto index_bits = static_cast<long double>(ceil_log2(n));
    switch (id) {
        case TheoremId::SimpleDynamic:
            // Escape has count 1 in a history of total i.
            return count > 0 ? ceil_log2_ratio(i, count) : ceil_log2(i) + index_bits;
        case TheoremId::Dynamic:
            return count > 0 ? ceil_log2_ratio(i + n, count) : ceil_log2(i + n) + index_bits;
        case TheoremId::LengthRestricted: {
            const std::uint64_t slack = p.distinct_mode ? 2 * (distinct + 1) : n;
            const auto c = count > 0 ? count : 1;
            const long double len = -smooth_weight(i + slack, c, p.ell, slack);
            return count > 0 ? len : len + index_bits;
        }
        case TheoremId::Alphabetic:
            return ceil_log2_ratio(i - 1 + n, count + 1) + 1;
        case TheoremId::UnequalCost: {
            const auto c = static_cast<long double>(count > 0 ? count : 1);
            const long double walk = std::log(static_cast<long double>(i) / c) / capacity_of(p.cost0, p.cost1) + p.cost1;
            return count > 0 ? walk : walk + index_bits * p.cost1;
        }
    }
    throw InvalidArgument("unknown theorem id");
}

TheoremBound theorem_rhs(TheoremId id, std::span<const Symbol> text, const TheoremParams& p) {
    const std::uint64_t n = p.alphabet_size;
    const auto ln = static_cast<long double>(n);
    const auto m = static_cast<long double>(text.size());
    const auto index_bits = static_cast<long double>(ceil_log2(n));
    std::vector<std::uint64_t> seen(n, 0);
    std::uint64_t distinct = 0;
    std::uint64_t max_r = 0;
    std::uint64_t max_slack = 0;
    TheoremBound b;
    long double first_terms = 0;  // first-occurrence contribution to the entropy form
    long double capacity = std::log(2.0L);
    if (id == TheoremId::UnequalCost) {
        capacity = capacity_of(p.cost0, p.cost1);
    }
    const long double delta =
        id == TheoremId::LengthRestricted
            ? 1.0L / ((std::ldexp(1.0L, static_cast<int>(p.ell)) - 1.0L) * std::log(2.0L))
            : 0.0L;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const Symbol s = text[k];
        if (s >= n) {
            throw InvalidArgument("symbol outside the alphabet");
        }
        const std::uint64_t i = k + 1;
        const auto li = static_cast<long double>(i);
        const std::uint64_t c = seen[s];
        b.steps += step_bound(id, i, c, distinct, p);
        const auto lc = static_cast<long double>(c);
        switch (id) {
            case TheoremId::SimpleDynamic:
                b.proof += c > 0 ? lg(li / lc) : ceil_log2(i) + index_bits;
                if (c == 0) first_terms += ceil_log2(i) + index_bits;
                break;
            case TheoremId::Dynamic:
                b.proof += c > 0 ? lg((li + ln) / lc) : ceil_log2(i + n) + index_bits;
                if (c == 0) first_terms += ceil_log2(i + n) + index_bits;
                break;
            case TheoremId::LengthRestricted: {
                const std::uint64_t slack = p.distinct_mode ? 2 * (distinct + 1) : n;
                max_slack = std::max(max_slack, slack);
                if (c > 0) {
                    b.proof += lg((li + static_cast<long double>(slack)) / lc);
                } else {
                    const long double first = step_bound(id, i, 0, distinct, p);
                    b.proof += first;
                    first_terms += first;
                }
                break;
            }
            case TheoremId::Alphabetic:
                b.proof += 2 + lg((li - 1 + ln) / (lc + 1));
                if (c == 0) first_terms += lg(li - 1 + ln);
                break;
            case TheoremId::UnequalCost: {
                const long double st = step_bound(id, i, c, distinct, p);
                b.proof += st;
                if (c == 0) first_terms += std::log(li) / capacity + index_bits * p.cost1;
                break;
            }
        }
        if (c > 0) {
            max_r = i;
        } else {
            ++distinct;
        }
        ++seen[s];
    }
    // Each repetition's ceiling adds less than one bit (plus the smoothing
    // penalty); m covers them all.
    if (id == TheoremId::SimpleDynamic || id == TheoremId::Dynamic) {
        b.proof += m;
    } else if (id == TheoremId::LengthRestricted) {
        b.proof += (1 + delta) * m;
    }
    const auto chain = lemma1_sides(text, static_cast<std::uint32_t>(n));
    const long double h = empirical_entropy(text, static_cast<std::uint32_t>(n));
    auto slack_term = [&](long double slack) {
        return max_r == 0 ? 0.0L : slack * lg(static_cast<long double>(max_r) + slack);
    };
    switch (id) {
        case TheoremId::SimpleDynamic:
            b.entropy = (h + 1) * m + chain.sum_log_counts + first_terms;
            break;
        case TheoremId::Dynamic:
            b.entropy = (h + 1) * m + chain.sum_log_counts + slack_term(ln) + first_terms;
            break;
        case TheoremId::LengthRestricted:
            b.entropy = (h + 1 + delta) * m + chain.sum_log_counts +
                        slack_term(static_cast<long double>(p.distinct_mode ? max_slack : n)) + first_terms;
            break;
        case TheoremId::Alphabetic:
            b.entropy = (h + 2) * m + chain.sum_log_counts + slack_term(ln) + first_terms;
            break;
        case TheoremId::UnequalCost: {
            const long double ratio = std::log(2.0L) / capacity;
            b.entropy = (h * ratio + p.cost1) * m + ratio * chain.sum_log_counts + first_terms;
            break;
        }
    }
    return b;
}

TheoremId theorem_for(const std::string& algorithm) {
    if (algorithm == "simple-dynamic-shannon") return TheoremId::SimpleDynamic;
    if (algorithm == "dynamic-shannon") return TheoremId::Dynamic;
    if (algorithm == "length-restricted") return TheoremId::LengthRestricted;
    if (algorithm == "alphabetic") return TheoremId::Alphabetic;
    if (algorithm == "unequal-cost") return TheoremId::UnequalCost;
    throw InvalidArgument("no dynamic theorem for algorithm " + algorithm);
}

void write_csv_header(std::ostream& out) { out << "algo,m,n,H,bits,bound,pass,ops\n"; }

void write_csv_row(std::ostream& out, const BoundReport& r) {
    const auto flags = out.flags();
    const auto prec = out.precision();
    out << r.algorithm << ',' << r.m << ',' << r.n << ',' << std::setprecision(12)
        << static_cast<double>(r.entropy) << ',' << static_cast<double>(r.measured) << ','
        << static_cast<double>(r.bound) << ',' << (r.pass ? "true" : "false") << ',' << r.ops << '\n';
    out.flags(flags);
    out.precision(prec);
}

}  // namespace dsc
