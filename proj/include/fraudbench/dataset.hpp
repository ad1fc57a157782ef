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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fraudbench/matrix.hpp"

namespace fraudbench {

/// Immutable-by-convention transaction table: a feature matrix, a binary
/// label per row (1 = fraud) and one name per feature column. All
/// operations that consume a Dataset treat it as read-only.
struct Dataset {
    Matrix features;
    std::vector<int> labels;
    std::vector<std::string> column_names;

    std::size_t n_rows() const { return features.rows; }
    std::size_t n_cols() const { return features.cols; }

    std::size_t fraud_count() const {
        std::size_t c = 0;
        for (int y : labels) c += (y == 1);
        return c;
    }

    /// Throws if labels/columns are inconsistent or any value is non-finite.
    void validate() const;

    std::optional<std::size_t> column_index(const std::string& name) const;
};

/// The Kaggle transaction layout: Time, V1..V28, Amount (+ Class label).
std::vector<std::string> kaggle_schema();
bool is_kaggle_schema(const std::vector<std::string>& columns);

/// Reads a CSV whose last column is the Class label. When `expected_columns`
/// is given the header (minus Class) must match it exactly. Cell-level
/// problems are reported with their 1-based data row and column name.
Dataset load_csv(const std::string& path,
                 const std::optional<std::vector<std::string>>& expected_columns = std::nullopt);

/// Writes the dataset back in the same layout load_csv reads.
void write_csv(const Dataset& data, const std::string& path);

/// New dataset holding the given rows, in the given order.
Dataset take_rows(const Dataset& data, std::span<const std::size_t> rows);

/// New dataset restricted to the named columns (feature projection).
Dataset take_columns(const Dataset& data, const std::vector<std::string>& columns);

Matrix take_matrix_columns(const Matrix& m, std::span<const std::size_t> cols);

}  // namespace fraudbench
