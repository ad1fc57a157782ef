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

#include "fraudbench/optim.hpp"

#include <cmath>
#include <stdexcept>

namespace fraudbench {

void Optimizer::step(std::size_t slot, std::span<double> params,
                     std::span<const double> grads) {
    if (params.size() != grads.size())
        throw std::invalid_argument("optimizer: parameter/gradient size mismatch");
    if (kind_ == Kind::sgd) {
        for (std::size_t i = 0; i < params.size(); ++i) params[i] -= lr_ * grads[i];
        return;
    }
    if (slot >= slots_.size()) slots_.resize(slot + 1);
    Slot& s = slots_[slot];
    if (s.m.size() != params.size()) {
        s.m.assign(params.size(), 0.0);
        s.v.assign(params.size(), 0.0);
        s.t = 0;
    }
    ++s.t;
    const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(s.t));
    const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(s.t));
    for (std::size_t i = 0; i < params.size(); ++i) {
        s.m[i] = beta1_ * s.m[i] + (1.0 - beta1_) * grads[i];
        s.v[i] = beta2_ * s.v[i] + (1.0 - beta2_) * grads[i] * grads[i];
        const double mhat = s.m[i] / bc1;
        const double vhat = s.v[i] / bc2;
        params[i] -= lr_ * mhat / (std::sqrt(vhat) + eps_);
    }
}

void Optimizer::step(DenseNet& net, const Gradients& grads) {
    if (grads.dw.size() != net.n_layers())
        throw std::invalid_argument("optimizer: gradient layer count mismatch");
    for (std::size_t l = 0; l < net.n_layers(); ++l) {
        DenseLayer& layer = net.layers()[l];
        step(2 * l, layer.w.data, grads.dw[l].data);
        step(2 * l + 1, layer.b, grads.db[l]);
    }
}

}  // namespace fraudbench
