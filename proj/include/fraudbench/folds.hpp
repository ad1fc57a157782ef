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

#pragma once

#include <cstdint>
#include <vector>

#include "fraudbench/dataset.hpp"

namespace fraudbench {

/// Deterministic stratified partition of row indices into k disjoint folds.
struct FoldPlan {
    std::size_t k = 0;
    std::vector<std::size_t> fold_assignment;  // one fold index in [0,k) per row
    std::uint64_t seed = 0;

    std::vector<std::size_t> test_indices(std::size_t fold) const;
    std::vector<std::size_t> train_indices(std::size_t fold) const;
};

/// Shuffles each class with the seeded RNG, then deals rows round-robin so
/// per-fold class counts differ by at most one.
FoldPlan stratified_kfold(const Dataset& data, std::size_t k, std::uint64_t seed);

/// Keeps every minority-class row, samples the majority class without
/// replacement down to the same count, and shuffles the combined order.
Dataset downsample_balanced(const Dataset& data, std::uint64_t seed);

/// Uniform row subsample (no replacement) used to cap training-set sizes.
/// Returns the input unchanged when it is already within the cap.
Dataset subsample_rows(const Dataset& data, std::size_t cap, std::uint64_t seed);

}  // namespace fraudbench
