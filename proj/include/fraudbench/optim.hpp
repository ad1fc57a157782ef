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

#include "fraudbench/net.hpp"

namespace fraudbench {

/// Parameter updater over flat buffers. Moment buffers are keyed by slot so
/// one optimizer can drive several tensors (each net layer uses two slots).
class Optimizer {
public:
    enum class Kind { sgd, adam };

    static Optimizer sgd(double lr) { return Optimizer(Kind::sgd, lr, 0, 0, 0); }
    static Optimizer adam(double lr, double beta1 = 0.9, double beta2 = 0.999,
                          double eps = 1e-8) {
        return Optimizer(Kind::adam, lr, beta1, beta2, eps);
    }

    /// p <- p - lr*g (sgd), or the bias-corrected adam update.
    void step(std::size_t slot, std::span<double> params, std::span<const double> grads);

    /// Applies one update across all layers of a net.
    void step(DenseNet& net, const Gradients& grads);

    double learning_rate() const { return lr_; }
    void set_learning_rate(double lr) { lr_ = lr; }

private:
    Optimizer(Kind kind, double lr, double b1, double b2, double eps)
        : kind_(kind), lr_(lr), beta1_(b1), beta2_(b2), eps_(eps) {}

    struct Slot {
        std::vector<double> m, v;
        long t = 0;
    };

    Kind kind_;
    double lr_, beta1_, beta2_, eps_;
    std::vector<Slot> slots_;
};

}  // namespace fraudbench
