// Copyright 2026 The pairweight Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAIRWEIGHT_DISTRIBUTION_HPP
#define PAIRWEIGHT_DISTRIBUTION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pairweight {

/// Exact histogram weight -> number of codewords (also used for T-value histograms).
class WeightDistribution {
  public:
    using Map = std::map<std::int64_t, std::uint64_t>;

    WeightDistribution() = default;
    explicit WeightDistribution(Map counts) {
        for (auto [w, c] : counts) add(w, c);
    }
    WeightDistribution(std::initializer_list<std::pair<const std::int64_t, std::uint64_t>> init)
        : WeightDistribution(Map(init)) {}

    void add(std::int64_t weight, std::uint64_t count = 1) {
        if (count != 0) counts_[weight] += count;
    }
    /// Removes up to `count` from a bin, dropping it when it reaches zero.
    void remove(std::int64_t weight, std::uint64_t count = 1) {
        auto it = counts_.find(weight);
        if (it == counts_.end()) return;
        if (it->second <= count)
            counts_.erase(it);
        else
            it->second -= count;
    }

    std::uint64_t count(std::int64_t weight) const {
        auto it = counts_.find(weight);
        return it == counts_.end() ? 0 : it->second;
    }
    const Map& counts() const { return counts_; }
    bool empty() const { return counts_.empty(); }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto [w, c] : counts_) t += c;
        return t;
    }
    std::size_t support_size() const { return counts_.size(); }
    std::vector<std::int64_t> support() const {
        std::vector<std::int64_t> s;
        for (auto [w, c] : counts_) s.push_back(w);
        return s;
    }
    std::optional<std::int64_t> min_nonzero_weight() const {
        for (auto [w, c] : counts_)
            if (w != 0) return w;
        return std::nullopt;
    }

    /// Enumerator polynomial, e.g. "1 + 52z^18 + 104z^21 + 572z^24".
    std::string enumerator(char var = 'z') const {
        std::string out;
        for (auto [w, c] : counts_) {
            if (!out.empty()) out += " + ";
            if (w == 0) {
                out += std::to_string(c);
                continue;
            }
            if (c != 1) out += std::to_string(c);
            out += var;
            if (w != 1) out += '^' + std::to_string(w);
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

  private:
    Map counts_;
};

struct DistributionDiff {
    std::int64_t weight;
    std::uint64_t predicted;
    std::uint64_t actual;
};

/// Bins where the two histograms disagree, ascending by weight.
inline std::vector<DistributionDiff> diff(const WeightDistribution& predicted, const WeightDistribution& actual) {
    std::map<std::int64_t, DistributionDiff> out;
    for (auto [w, c] : predicted.counts()) out[w] = {w, c, actual.count(w)};
    for (auto [w, c] : actual.counts())
        if (!out.count(w)) out[w] = {w, 0, c};
    std::vector<DistributionDiff> v;
    for (auto& [w, d] : out)
        if (d.predicted != d.actual) v.push_back(d);
    return v;
}

inline std::string describe(const std::vector<DistributionDiff>& diffs) {
    std::string s;
    for (const auto& d : diffs) {
        if (!s.empty()) s += "; ";
        s += "weight " + std::to_string(d.weight) + ": predicted " + std::to_string(d.predicted) + ", actual " +
             std::to_string(d.actual);
    }
    return s;
}

}  // namespace pairweight

#endif  // PAIRWEIGHT_DISTRIBUTION_HPP
