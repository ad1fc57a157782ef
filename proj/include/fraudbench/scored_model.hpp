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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fraudbench/dataset.hpp"
#include "fraudbench/json.hpp"
#include "fraudbench/matrix.hpp"

namespace fraudbench {

/// Unified contract for all ten models: fit on a Dataset, then emit one
/// real-valued fraud score per row (higher = more fraud-like). Fitted
/// models are immutable and safe to score from many threads.
class ScoredModel {
public:
    virtual ~ScoredModel() = default;

    virtual std::string kind() const = 0;
    virtual void fit(const Dataset& train, std::uint64_t seed) = 0;
    virtual std::vector<double> score(const Matrix& rows) const = 0;

    /// Hyperparameters as configured (for report echo).
    virtual Json hyperparameters() const = 0;

    /// Fitted state; from_json must restore a model that scores identically.
    virtual Json state_to_json() const = 0;
    virtual void state_from_json(const Json& j) = 0;

    /// Set when fit stopped at an iteration cap or kept a fallback
    /// checkpoint; empty otherwise.
    const std::string& fit_note() const { return fit_note_; }

protected:
    std::string fit_note_;
};

/// Supervised kinds: lr knn svm dt rf xgb. Unsupervised: ocsvm rbm ae gan.
const std::vector<std::string>& model_kinds();
bool is_unsupervised_kind(const std::string& kind);

/// Stable per-kind ordinal used for seed derivation.
std::size_t model_ordinal(const std::string& kind);

std::unique_ptr<ScoredModel> make_model(const std::string& kind, const Json& params);

/// On-disk form: kind + optional preprocessing pipeline + fitted state,
/// protected by a checksum over the payload.
struct ModelFile {
    std::string kind;
    Json params;
    Json state;
    Json pipeline;  // scaler params + feature columns, may be null
};

void save_model_file(const ModelFile& mf, const std::string& path);
ModelFile load_model_file(const std::string& path);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace fraudbench
