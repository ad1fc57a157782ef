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

#include "fraudbench/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fraudbench/sort_rows.hpp"

namespace fraudbench {

LogisticModel::LogisticModel(const Json& params) {
    c_ = params.value("C", 0.1);
    max_iter_ = params.value("max_iter", 20000);
    tol_ = params.value("tol", 1e-10);
    if (c_ <= 0.0) throw std::invalid_argument("lr: C must be positive");
}

double LogisticModel::objective(const Matrix& x, const std::vector<int>& y, double beta0,
                                const std::vector<double>& beta, double c) {
    double loss = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) {
        const double m = beta0 + dot(x.row(i), beta);
        // -log p(y|m) in a form stable for large |m|
        loss += y[i] == 1 ? softplus(-m) : softplus(m);
    }
    double l1 = 0.0;
    for (double b : beta) l1 += std::abs(b);
    return loss + l1 / c;
}

namespace {

// gradient of the sum logistic loss at (beta0, beta)
void loss_gradient(const Matrix& x, const std::vector<int>& y, double beta0,
                   const std::vector<double>& beta, double& g0, std::vector<double>& g) {
    g0 = 0.0;
    g.assign(beta.size(), 0.0);
    for (std::size_t i = 0; i < x.rows; ++i) {
        const double m = beta0 + dot(x.row(i), beta);
        const double r = sigmoid(m) - static_cast<double>(y[i]);
        g0 += r;
        const auto row = x.row(i);
        for (std::size_t j = 0; j < g.size(); ++j) g[j] += r * row[j];
    }
}

double soft_threshold(double v, double t) {
    if (v > t) return v - t;
    if (v < -t) return v + t;
    return 0.0;
}

}  // namespace

void LogisticModel::fit(const Dataset& train, std::uint64_t /*seed*/) {
    // canonical row order makes the fit independent of input permutation
    const Dataset sorted = sort_rows_canonical(train);
    const Matrix& x = sorted.features;
    const std::vector<int>& y = sorted.labels;
    const std::size_t p = x.cols;
    if (x.rows == 0) throw std::invalid_argument("lr: empty training set");

    // Lipschitz bound for the sum loss: lambda_max(X'X)/4, estimated by
    // power iteration on X'X (plus the intercept column).
    std::vector<double> v(p + 1, 1.0);
    double lam = 1.0;
    for (int it = 0; it < 30; ++it) {
        std::vector<double> xv(x.rows, 0.0);
        for (std::size_t i = 0; i < x.rows; ++i) {
            double s = v[0];  // intercept column of ones
            const auto row = x.row(i);
            for (std::size_t j = 0; j < p; ++j) s += row[j] * v[j + 1];
            xv[i] = s;
        }
        std::vector<double> w(p + 1, 0.0);
        for (std::size_t i = 0; i < x.rows; ++i) {
            w[0] += xv[i];
            const auto row = x.row(i);
            for (std::size_t j = 0; j < p; ++j) w[j + 1] += row[j] * xv[i];
        }
        lam = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
        if (lam <= 0.0) break;
        for (double& wi : w) wi /= lam;
        v = std::move(w);
    }
    const double step = 1.0 / std::max(lam * 0.25 * 1.01, 1e-12);
    const double penalty = 1.0 / c_;

    // FISTA
    beta0_ = 0.0;
    beta_.assign(p, 0.0);
    double yb0 = 0.0;
    std::vector<double> yb(p, 0.0);
    double t_acc = 1.0;
    double prev_obj = objective(x, y, beta0_, beta_, c_);
    converged_ = false;
    fit_note_.clear();

    double g0;
    std::vector<double> g;
    for (int it = 0; it < max_iter_; ++it) {
        loss_gradient(x, y, yb0, yb, g0, g);
        const double nb0 = yb0 - step * g0;  // unpenalized intercept
        std::vector<double> nb(p);
        for (std::size_t j = 0; j < p; ++j)
            nb[j] = soft_threshold(yb[j] - step * g[j], step * penalty);

        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_acc * t_acc));
        const double mom = (t_acc - 1.0) / t_next;
        yb0 = nb0 + mom * (nb0 - beta0_);
        for (std::size_t j = 0; j < p; ++j) yb[j] = nb[j] + mom * (nb[j] - beta_[j]);
        beta0_ = nb0;
        beta_ = std::move(nb);
        t_acc = t_next;

        if ((it & 15) == 15) {
            const double obj = objective(x, y, beta0_, beta_, c_);
            if (std::abs(prev_obj - obj) <= tol_ * (1.0 + std::abs(obj))) {
                converged_ = true;
                break;
            }
            prev_obj = obj;
        }
    }
    if (!converged_) fit_note_ = "lr: iteration cap reached before convergence";
}

std::vector<double> LogisticModel::score(const Matrix& rows) const {
    if (rows.cols != beta_.size())
        throw std::invalid_argument("lr: feature width mismatch");
    std::vector<double> out(rows.rows);
    for (std::size_t i = 0; i < rows.rows; ++i)
        out[i] = sigmoid(beta0_ + dot(rows.row(i), beta_));
    return out;
}

Json LogisticModel::hyperparameters() const {
    return Json{{"C", c_}, {"penalty", "l1"}};
}

Json LogisticModel::state_to_json() const {
    return Json{{"beta0", beta0_}, {"beta", beta_}, {"converged", converged_}};
}

void LogisticModel::state_from_json(const Json& j) {
    beta0_ = j.at("beta0").get<double>();
    beta_ = j.at("beta").get<std::vector<double>>();
    converged_ = j.value("converged", true);
}

}  // namespace fraudbench
