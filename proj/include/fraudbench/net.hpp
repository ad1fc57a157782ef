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
#include <string>
#include <vector>

#include "fraudbench/json.hpp"
#include "fraudbench/matrix.hpp"

namespace fraudbench {

enum class Act { linear, relu, leaky_relu, sigmoid, tanh_fn };

std::string act_name(Act a);
Act act_from_name(const std::string& name);

struct DenseLayer {
    Matrix w;               // [out x in]
    std::vector<double> b;  // [out]
    Act act = Act::linear;
    double slope = 0.0;  // leaky_relu negative slope

    std::size_t fan_in() const { return w.cols; }
    std::size_t fan_out() const { return w.rows; }
};

/// Activations kept from a forward pass; consumed by backward().
struct ForwardCache {
    std::vector<Matrix> inputs;    // input to each layer
    std::vector<Matrix> preacts;   // affine output of each layer
    Matrix output;
};

struct Gradients {
    std::vector<Matrix> dw;
    std::vector<std::vector<double>> db;
    Matrix dinput;  // gradient w.r.t. the batch, for chaining nets
};

/// Plain fully-connected feed-forward net. Training code drives it through
/// forward/backward; fitted nets are only read.
class DenseNet {
public:
    DenseNet() = default;

    /// widths = {in, h1, ..., out}; one activation per layer.
    /// Weights start uniform in +-sqrt(6/(fan_in+fan_out)), biases at zero.
    DenseNet(const std::vector<std::size_t>& widths, const std::vector<Act>& acts,
             std::uint64_t seed, double leaky_slope = 0.2);

    std::size_t input_size() const { return layers_.empty() ? 0 : layers_.front().fan_in(); }
    std::size_t output_size() const { return layers_.empty() ? 0 : layers_.back().fan_out(); }
    std::size_t n_layers() const { return layers_.size(); }

    std::vector<DenseLayer>& layers() { return layers_; }
    const std::vector<DenseLayer>& layers() const { return layers_; }

    Matrix forward(const Matrix& batch) const;
    Matrix forward(const Matrix& batch, ForwardCache& cache) const;

    /// dloss_doutput is dL/d(output), same shape as the cached output.
    Gradients backward(const ForwardCache& cache, const Matrix& dloss_doutput) const;

    bool all_finite() const;

    Json to_json() const;
    static DenseNet from_json(const Json& j);

private:
    std::vector<DenseLayer> layers_;
};

}  // namespace fraudbench
