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
#include "dsc/partial_sums.hpp"

namespace dsc {

void FreqOrderList::require(std::uint32_t a) const {
    if (!contains(a)) {
        throw InvalidArgument("symbol not in the frequency list");
    }
}

std::uint64_t FreqOrderList::get(std::uint32_t a) const {
    require(a);
    return freq_[a];
}

std::uint64_t FreqOrderList::before(std::uint32_t a) {
    require(a);
    return tree_.prefix_sum(Key{freq_[a], a});
}

void FreqOrderList::increment(std::uint32_t a) {
    if (a >= freq_.size()) {
        throw InvalidArgument("symbol outside the list capacity");
    }
    if (freq_[a] > 0) {
        tree_.erase(Key{freq_[a], a});
    }
    ++freq_[a];
    tree_.add(Key{freq_[a], a}, freq_[a]);
}

std::uint32_t FreqOrderList::select(std::uint64_t k) {
    if (k >= total()) {
        throw InvalidArgument("select position out of range");
    }
    const auto s = tree_.search([k](const Key&, std::uint64_t before, std::uint64_t) { return before > k; });
    return s.prev.key.symbol;
}

std::optional<FreqOrderList::Entry> FreqOrderList::first_at_or_after(std::uint64_t t) {
    const auto s = tree_.search([t](const Key&, std::uint64_t before, std::uint64_t) { return before >= t; });
    if (!s.first.found) {
        return std::nullopt;
    }
    return Entry{s.first.key.symbol, s.first.freq, s.first.before};
}

std::optional<FreqOrderList::Entry> FreqOrderList::previous(std::uint32_t a) {
    require(a);
    const Key key{freq_[a], a};
    const KeyLess less;
    const auto s = tree_.search([&](const Key& k, std::uint64_t, std::uint64_t) { return !less(k, key); });
    if (!s.prev.found) {
        return std::nullopt;
    }
    return Entry{s.prev.key.symbol, s.prev.freq, s.prev.before};
}

std::vector<FreqOrderList::Entry> FreqOrderList::entries() const {
    std::vector<Entry> out;
    std::uint64_t acc = 0;
    tree_.for_each([&](const Key& k, std::uint64_t f) {
        out.push_back({k.symbol, f, acc});
        acc += f;
    });
    return out;
}

bool FreqOrderList::check() const {
    if (!tree_.check()) {
        return false;
    }
    for (const auto& e : entries()) {
        if (e.freq != freq_[e.symbol]) {
            return false;
        }
    }
    return true;
}

}  // namespace dsc
