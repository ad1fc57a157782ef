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

#include "fraudbench/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fraudbench/rng.hpp"

namespace fraudbench {

Dataset synth_generate(std::size_t n_normal, std::size_t n_fraud, double separation,
                       std::size_t dims, std::uint64_t seed) {
    if (dims < 1) throw std::invalid_argument("synth: dims must be at least 1");
    if (separation < 0.0) throw std::invalid_argument("synth: separation must be >= 0");

    Dataset data;
    data.column_names.reserve(dims);
    for (std::size_t j = 1; j <= dims; ++j) data.column_names.push_back("V" + std::to_string(j));

    const std::size_t n = n_normal + n_fraud;
    data.features = Matrix(n, dims);
    data.labels.assign(n, 0);

    const double cov_scale = 1.0 + std::min(separation, 1.0);
    const double fraud_sd = std::sqrt(cov_scale);

    Rng rng(seed);
    for (std::size_t i = 0; i < n_normal; ++i)
        for (std::size_t j = 0; j < dims; ++j) data.features(i, j) = rng.normal();
    for (std::size_t i = n_normal; i < n; ++i) {
        data.labels[i] = 1;
        for (std::size_t j = 0; j < dims; ++j)
            data.features(i, j) = separation + fraud_sd * rng.normal();
    }
    return data;
}

}  // namespace fraudbench
