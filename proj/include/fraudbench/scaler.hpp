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

#include <span>
#include <vector>

#include "fraudbench/dataset.hpp"
#include "fraudbench/matrix.hpp"

namespace fraudbench {

/// Per-column median and interquartile range, fitted on training rows only
/// and reused verbatim on test rows.
struct ScalerParams {
    std::vector<std::size_t> columns;
    std::vector<double> median;
    std::vector<double> iqr;  // q3 - q1, >= 0
};

/// Quantile by linear interpolation between order statistics at index (n-1)*q.
/// `sorted` must be ascending and non-empty.
double quantile_sorted(std::span<const double> sorted, double q);

/// Fits medians/IQRs of the selected columns over the given rows.
ScalerParams fit_robust_scaler(const Matrix& features, std::span<const std::size_t> rows,
                               std::span<const std::size_t> columns);

/// (x - median) / iqr on the selected columns; columns with iqr == 0 map
/// to all zeros. Other columns pass through.
Matrix apply_scaler(const Matrix& features, const ScalerParams& params);

Dataset apply_scaler(const Dataset& data, const ScalerParams& params);

/// Column selection rule: Time and Amount for the Kaggle layout (the V
/// columns are already PCA outputs), every column otherwise.
std::vector<std::size_t> default_scale_columns(const Dataset& data);

}  // namespace fraudbench
