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

#include "fraudbench/scaler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fraudbench {

double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("quantile: empty input");
    if (q <= 0.0) return sorted.front();
    if (q >= 1.0) return sorted.back();
    const double h = static_cast<double>(sorted.size() - 1) * q;
    const std::size_t lo = static_cast<std::size_t>(h);
    const double frac = h - static_cast<double>(lo);
    if (frac == 0.0 || lo + 1 >= sorted.size()) return sorted[lo];
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

ScalerParams fit_robust_scaler(const Matrix& features, std::span<const std::size_t> rows,
                               std::span<const std::size_t> columns) {
    if (rows.empty()) throw std::invalid_argument("scaler: no rows to fit on");
    ScalerParams params;
    params.columns.assign(columns.begin(), columns.end());
    params.median.reserve(columns.size());
    params.iqr.reserve(columns.size());

    std::vector<double> col(rows.size());
    for (const std::size_t c : columns) {
        if (c >= features.cols) throw std::invalid_argument("scaler: column index out of range");
        for (std::size_t i = 0; i < rows.size(); ++i) col[i] = features(rows[i], c);
        std::sort(col.begin(), col.end());
        params.median.push_back(quantile_sorted(col, 0.5));
        params.iqr.push_back(quantile_sorted(col, 0.75) - quantile_sorted(col, 0.25));
    }
    return params;
}

Matrix apply_scaler(const Matrix& features, const ScalerParams& params) {
    Matrix out = features;
    for (std::size_t k = 0; k < params.columns.size(); ++k) {
        const std::size_t c = params.columns[k];
        if (c >= out.cols) throw std::invalid_argument("scaler: column index out of range");
        const double med = params.median[k];
        const double iqr = params.iqr[k];
        for (std::size_t i = 0; i < out.rows; ++i)
            out(i, c) = (iqr == 0.0) ? 0.0 : (out(i, c) - med) / iqr;
    }
    return out;
}

Dataset apply_scaler(const Dataset& data, const ScalerParams& params) {
    Dataset out;
    out.column_names = data.column_names;
    out.labels = data.labels;
    out.features = apply_scaler(data.features, params);
    return out;
}

std::vector<std::size_t> default_scale_columns(const Dataset& data) {
    std::vector<std::size_t> cols;
    if (is_kaggle_schema(data.column_names)) {
        cols.push_back(*data.column_index("Time"));
        cols.push_back(*data.column_index("Amount"));
    } else {
        cols.resize(data.n_cols());
        for (std::size_t j = 0; j < data.n_cols(); ++j) cols[j] = j;
    }
    return cols;
}

}  // namespace fraudbench
