// Copyright 2026 The FraudBench Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fraudbench/folds.hpp"

#include <stdexcept>

#include "fraudbench/rng.hpp"

namespace fraudbench {

std::vector<std::size_t> FoldPlan::test_indices(std::size_t fold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fold_assignment.size(); ++i)
        if (fold_assignment[i] == fold) out.push_back(i);
    return out;
}

std::vector<std::size_t> FoldPlan::train_indices(std::size_t fold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fold_assignment.size(); ++i)
        if (fold_assignment[i] != fold) out.push_back(i);
    return out;
}

FoldPlan stratified_kfold(const Dataset& data, std::size_t k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("kfold: k must be at least 2");
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < data.n_rows(); ++i)
        (data.labels[i] == 1 ? pos : neg).push_back(i);
    if (pos.size() < k || neg.size() < k)
        throw std::invalid_argument("kfold: each class needs at least k rows (k=" +
                                    std::to_string(k) + ", fraud=" + std::to_string(pos.size()) +
                                    ", normal=" + std::to_string(neg.size()) + ")");

    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    plan.fold_assignment.assign(data.n_rows(), 0);

    Rng rng(seed);
    for (auto* cls : {&neg, &pos}) {
        rng.shuffle(*cls);
        for (std::size_t i = 0; i < cls->size(); ++i)
            plan.fold_assignment[(*cls)[i]] = i % k;
    }
    return plan;
}

Dataset downsample_balanced(const Dataset& data, std::uint64_t seed) {
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < data.n_rows(); ++i)
        (data.labels[i] == 1 ? pos : neg).push_back(i);
    if (pos.empty() || neg.empty())
        throw std::invalid_argument("downsample: need at least one row of each class");

    auto& minority = pos.size() <= neg.size() ? pos : neg;
    auto& majority = pos.size() <= neg.size() ? neg : pos;

    Rng rng(seed);
    std::vector<std::size_t> kept = minority;
    const std::vector<std::size_t> picks =
        rng.sample_without_replacement(majority.size(), minority.size());
    for (const std::size_t p : picks) kept.push_back(majority[p]);
    rng.shuffle(kept);
    return take_rows(data, kept);
}

Dataset subsample_rows(const Dataset& data, std::size_t cap, std::uint64_t seed) {
    if (data.n_rows() <= cap) return data;
    Rng rng(seed);
    std::vector<std::size_t> picks = rng.sample_without_replacement(data.n_rows(), cap);
    return take_rows(data, picks);
}

}  // namespace fraudbench
