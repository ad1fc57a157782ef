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

#include "fraudbench/net.hpp"

#include <cmath>
#include <stdexcept>

#include "fraudbench/rng.hpp"

namespace fraudbench {

std::string act_name(Act a) {
    switch (a) {
        case Act::linear: return "linear";
        case Act::relu: return "relu";
        case Act::leaky_relu: return "leaky_relu";
        case Act::sigmoid: return "sigmoid";
        case Act::tanh_fn: return "tanh";
    }
    return "linear";
}

Act act_from_name(const std::string& name) {
    if (name == "linear") return Act::linear;
    if (name == "relu") return Act::relu;
    if (name == "leaky_relu") return Act::leaky_relu;
    if (name == "sigmoid") return Act::sigmoid;
    if (name == "tanh") return Act::tanh_fn;
    throw std::invalid_argument("net: unknown activation: " + name);
}

namespace {

double apply_act(Act a, double slope, double z) {
    switch (a) {
        case Act::linear: return z;
        case Act::relu: return z > 0.0 ? z : 0.0;
        case Act::leaky_relu: return z > 0.0 ? z : slope * z;
        case Act::sigmoid: return sigmoid(z);
        case Act::tanh_fn: return std::tanh(z);
    }
    return z;
}

// derivative in terms of the pre-activation z
double act_deriv(Act a, double slope, double z) {
    switch (a) {
        case Act::linear: return 1.0;
        case Act::relu: return z > 0.0 ? 1.0 : 0.0;
        case Act::leaky_relu: return z > 0.0 ? 1.0 : slope;
        case Act::sigmoid: {
            const double s = sigmoid(z);
            return s * (1.0 - s);
        }
        case Act::tanh_fn: {
            const double t = std::tanh(z);
            return 1.0 - t * t;
        }
    }
    return 1.0;
}

}  // namespace

DenseNet::DenseNet(const std::vector<std::size_t>& widths, const std::vector<Act>& acts,
                   std::uint64_t seed, double leaky_slope) {
    if (widths.size() < 2) throw std::invalid_argument("net: need at least one layer");
    if (acts.size() != widths.size() - 1)
        throw std::invalid_argument("net: one activation required per layer");
    Rng rng(seed);
    layers_.resize(acts.size());
    for (std::size_t l = 0; l < acts.size(); ++l) {
        DenseLayer& layer = layers_[l];
        const std::size_t fan_in = widths[l];
        const std::size_t fan_out = widths[l + 1];
        layer.w = Matrix(fan_out, fan_in);
        layer.b.assign(fan_out, 0.0);
        layer.act = acts[l];
        layer.slope = (acts[l] == Act::leaky_relu) ? leaky_slope : 0.0;
        const double bound = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
        for (double& v : layer.w.data) v = rng.uniform(-bound, bound);
    }
}

Matrix DenseNet::forward(const Matrix& batch) const {
    ForwardCache cache;
    return forward(batch, cache);
}

Matrix DenseNet::forward(const Matrix& batch, ForwardCache& cache) const {
    if (batch.cols != input_size())
        throw std::invalid_argument("net: batch has " + std::to_string(batch.cols) +
                                    " columns, expected " + std::to_string(input_size()));
    cache.inputs.clear();
    cache.preacts.clear();
    Matrix x = batch;
    for (const DenseLayer& layer : layers_) {
        cache.inputs.push_back(x);
        Matrix z = matmul_nt(x, layer.w);  // [B x out]
        for (std::size_t i = 0; i < z.rows; ++i)
            for (std::size_t j = 0; j < z.cols; ++j) z(i, j) += layer.b[j];
        cache.preacts.push_back(z);
        for (std::size_t i = 0; i < z.rows; ++i)
            for (std::size_t j = 0; j < z.cols; ++j)
                z(i, j) = apply_act(layer.act, layer.slope, z(i, j));
        x = std::move(z);
    }
    cache.output = x;
    return x;
}

Gradients DenseNet::backward(const ForwardCache& cache, const Matrix& dloss_doutput) const {
    if (cache.preacts.size() != layers_.size())
        throw std::invalid_argument("net: cache does not match this net");
    if (!dloss_doutput.same_shape(cache.output))
        throw std::invalid_argument("net: loss gradient shape mismatch");

    Gradients grads;
    grads.dw.resize(layers_.size());
    grads.db.resize(layers_.size());

    Matrix delta = dloss_doutput;
    for (std::size_t li = layers_.size(); li-- > 0;) {
        const DenseLayer& layer = layers_[li];
        const Matrix& z = cache.preacts[li];
        // dL/dz = dL/da * act'(z)
        for (std::size_t i = 0; i < delta.rows; ++i)
            for (std::size_t j = 0; j < delta.cols; ++j)
                delta(i, j) *= act_deriv(layer.act, layer.slope, z(i, j));

        grads.dw[li] = matmul_tn(delta, cache.inputs[li]);  // [out x in]
        grads.db[li].assign(layer.b.size(), 0.0);
        for (std::size_t i = 0; i < delta.rows; ++i)
            for (std::size_t j = 0; j < delta.cols; ++j) grads.db[li][j] += delta(i, j);

        delta = matmul(delta, layer.w);  // dL/d(input) [B x in]
    }
    grads.dinput = std::move(delta);
    return grads;
}

bool DenseNet::all_finite() const {
    for (const DenseLayer& layer : layers_) {
        if (!layer.w.all_finite()) return false;
        for (double v : layer.b)
            if (!std::isfinite(v)) return false;
    }
    return true;
}

Json DenseNet::to_json() const {
    Json layers = Json::array();
    for (const DenseLayer& layer : layers_) {
        Json j;
        j["activation"] = act_name(layer.act);
        j["slope"] = layer.slope;
        j["rows"] = layer.w.rows;
        j["cols"] = layer.w.cols;
        j["w"] = layer.w.data;  // row-major
        j["b"] = layer.b;
        layers.push_back(std::move(j));
    }
    return Json{{"layers", std::move(layers)}};
}

DenseNet DenseNet::from_json(const Json& j) {
    DenseNet net;
    for (const Json& lj : j.at("layers")) {
        DenseLayer layer;
        layer.act = act_from_name(lj.at("activation").get<std::string>());
        layer.slope = lj.at("slope").get<double>();
        layer.w.rows = lj.at("rows").get<std::size_t>();
        layer.w.cols = lj.at("cols").get<std::size_t>();
        layer.w.data = lj.at("w").get<std::vector<double>>();
        layer.b = lj.at("b").get<std::vector<double>>();
        if (layer.w.data.size() != layer.w.rows * layer.w.cols ||
            layer.b.size() != layer.w.rows)
            throw std::invalid_argument("net: inconsistent layer shapes in serialized form");
        net.layers_.push_back(std::move(layer));
    }
    return net;
}

}  // namespace fraudbench
