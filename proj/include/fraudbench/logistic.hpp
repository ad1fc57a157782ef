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

#include "fraudbench/scored_model.hpp"

namespace fraudbench {

/// L1-regularized logistic regression fitted by accelerated proximal
/// gradient (soft-thresholding); C is the inverse regularization strength
/// and the intercept is never penalized. Score is sigmoid(b0 + beta.x).
class LogisticModel final : public ScoredModel {
public:
    explicit LogisticModel(const Json& params);

    std::string kind() const override { return "lr"; }
    void fit(const Dataset& train, std::uint64_t seed) override;
    std::vector<double> score(const Matrix& rows) const override;
    Json hyperparameters() const override;
    Json state_to_json() const override;
    void state_from_json(const Json& j) override;

    double intercept() const { return beta0_; }
    const std::vector<double>& coefficients() const { return beta_; }
    bool converged() const { return converged_; }

    /// Sum logistic loss + (1/C)*l1(beta); exposed for the solver tests.
    static double objective(const Matrix& x, const std::vector<int>& y, double beta0,
                            const std::vector<double>& beta, double c);

private:
    double c_ = 0.1;
    int max_iter_ = 20000;
    double tol_ = 1e-10;

    double beta0_ = 0.0;
    std::vector<double> beta_;
    bool converged_ = false;
};

}  // namespace fraudbench
