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

#include "fraudbench/dataset.hpp"

namespace fraudbench {

/// Desk-scale stand-in for the transaction data. Normal rows come from a
/// standard spherical Gaussian; fraud rows are mean-shifted by `separation`
/// along every axis with inflated covariance. The covariance factor ramps
/// from 1 at separation 0 (identical classes, so every scorer lands at
/// AUROC 1/2) up to 2 from separation 1 onward. Columns are named V1..Vd.
Dataset synth_generate(std::size_t n_normal, std::size_t n_fraud, double separation,
                       std::size_t dims, std::uint64_t seed);

}  // namespace fraudbench
