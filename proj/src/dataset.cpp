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

#include "fraudbench/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fraudbench/errors.hpp"

namespace fraudbench {

void Dataset::validate() const {
    if (labels.size() != features.rows)
        throw ParseError("dataset: label count " + std::to_string(labels.size()) +
                         " does not match row count " + std::to_string(features.rows));
    if (column_names.size() != features.cols)
        throw ParseError("dataset: column name count does not match feature count");
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != 0 && labels[i] != 1)
            throw ParseError("dataset: label outside {0,1} at row " + std::to_string(i + 1));
    for (std::size_t i = 0; i < features.rows; ++i)
        for (std::size_t j = 0; j < features.cols; ++j)
            if (!std::isfinite(features(i, j)))
                throw ParseError("dataset: non-finite value at row " + std::to_string(i + 1) +
                                 ", column " + column_names[j]);
}

std::optional<std::size_t> Dataset::column_index(const std::string& name) const {
    for (std::size_t j = 0; j < column_names.size(); ++j)
        if (column_names[j] == name) return j;
    return std::nullopt;
}

std::vector<std::string> kaggle_schema() {
    std::vector<std::string> cols;
    cols.reserve(30);
    cols.push_back("Time");
    for (int i = 1; i <= 28; ++i) cols.push_back("V" + std::to_string(i));
    cols.push_back("Amount");
    return cols;
}

bool is_kaggle_schema(const std::vector<std::string>& columns) {
    return columns == kaggle_schema();
}

namespace {

std::string strip_quotes(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(strip_quotes(line.substr(start)));
            break;
        }
        out.push_back(strip_quotes(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

double parse_cell(const std::string& cell, std::size_t data_row, const std::string& col) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw ParseError("csv: non-numeric cell '" + cell + "' at row " +
                         std::to_string(data_row) + ", column " + col);
    if (!std::isfinite(v))
        throw ParseError("csv: non-finite value at row " + std::to_string(data_row) +
                         ", column " + col);
    return v;
}

}  // namespace

Dataset load_csv(const std::string& path,
                 const std::optional<std::vector<std::string>>& expected_columns) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("csv: cannot open file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw ParseError("csv: empty file: " + path);

    std::vector<std::string> header = split_line(line);
    if (header.size() < 2)
        throw ParseError("csv: header needs at least one feature and the Class column");
    if (header.back() != "Class")
        throw ParseError("csv: last header column must be 'Class', got '" + header.back() + "'");
    header.pop_back();

    if (expected_columns && header != *expected_columns) {
        std::string want;
        for (const auto& c : *expected_columns) want += (want.empty() ? "" : ",") + c;
        std::string got;
        for (const auto& c : header) got += (got.empty() ? "" : ",") + c;
        throw ParseError("csv: header mismatch; expected [" + want + "] got [" + got + "]");
    }

    const std::size_t n_cols = header.size();
    Dataset data;
    data.column_names = header;
    std::vector<double> values;
    std::vector<int> labels;

    std::size_t data_row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        ++data_row;
        const std::vector<std::string> cells = split_line(line);
        if (cells.size() != n_cols + 1)
            throw ParseError("csv: row " + std::to_string(data_row) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(n_cols + 1));
        for (std::size_t j = 0; j < n_cols; ++j)
            values.push_back(parse_cell(cells[j], data_row, header[j]));
        const double y = parse_cell(cells[n_cols], data_row, "Class");
        if (y != 0.0 && y != 1.0)
            throw ParseError("csv: Class value must be 0 or 1 at row " +
                             std::to_string(data_row) + ", got " + cells[n_cols]);
        labels.push_back(static_cast<int>(y));
    }

    data.features.rows = data_row;
    data.features.cols = n_cols;
    data.features.data = std::move(values);
    data.labels = std::move(labels);
    data.validate();
    return data;
}

void write_csv(const Dataset& data, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("csv: cannot open file for writing: " + path);

    std::string header;
    for (const auto& c : data.column_names) header += "\"" + c + "\",";
    header += "\"Class\"\n";
    out << header;

    char buf[64];
    for (std::size_t i = 0; i < data.n_rows(); ++i) {
        std::string row;
        for (std::size_t j = 0; j < data.n_cols(); ++j) {
            // %.17g round-trips doubles exactly
            std::snprintf(buf, sizeof(buf), "%.17g", data.features(i, j));
            row += buf;
            row += ',';
        }
        row += data.labels[i] ? "1" : "0";
        row += '\n';
        out << row;
    }
    if (!out) throw IoError("csv: write failed: " + path);
}

Dataset take_rows(const Dataset& data, std::span<const std::size_t> rows) {
    Dataset out;
    out.column_names = data.column_names;
    out.features = Matrix(rows.size(), data.n_cols());
    out.labels.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::size_t r = rows[i];
        for (std::size_t j = 0; j < data.n_cols(); ++j) out.features(i, j) = data.features(r, j);
        out.labels[i] = data.labels[r];
    }
    return out;
}

Dataset take_columns(const Dataset& data, const std::vector<std::string>& columns) {
    std::vector<std::size_t> idx;
    idx.reserve(columns.size());
    for (const auto& name : columns) {
        const auto j = data.column_index(name);
        if (!j) throw ParseError("dataset: no such column: " + name);
        idx.push_back(*j);
    }
    Dataset out;
    out.column_names = columns;
    out.labels = data.labels;
    out.features = take_matrix_columns(data.features, idx);
    return out;
}

Matrix take_matrix_columns(const Matrix& m, std::span<const std::size_t> cols) {
    Matrix out(m.rows, cols.size());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(i, cols[j]);
    return out;
}

}  // namespace fraudbench
