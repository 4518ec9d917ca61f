// Copyright 2026 The wgvqd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wgvqd/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace wgvqd {

void OptimizerConfig::validate() const {
    if (!(wolfe_c1 > 0.0 && wolfe_c1 < wolfe_c2 && wolfe_c2 < 1.0)) {
        throw std::invalid_argument("Wolfe constants must satisfy 0 < c1 < c2 < 1");
    }
    if (!(grad_tol > 0.0)) {
        throw std::invalid_argument("gradient tolerance must be positive");
    }
    if (max_iters < 1) {
        throw std::invalid_argument("max_iters must be at least 1");
    }
    if (max_linesearch_steps < 1) {
        throw std::invalid_argument("max_linesearch_steps must be at least 1");
    }
}

const char *to_string(OptimizerStatus status) {
    switch (status) {
    case OptimizerStatus::GradConverged:
        return "grad_converged";
    case OptimizerStatus::MaxIters:
        return "max_iters";
    case OptimizerStatus::LineSearchFailed:
        return "line_search_failed";
    }
    return "?";
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

double inf_norm(std::span<const double> a) {
    double m = 0.0;
    for (double v : a) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool all_finite(std::span<const double> a) {
    return std::all_of(a.begin(), a.end(), [](double v) { return std::isfinite(v); });
}

struct LinePoint {
    double alpha = 0.0;
    double phi = 0.0;
    std::optional<double> dphi;
    std::vector<double> x;
    std::vector<double> g; // empty until the gradient has been evaluated
};

class LineSearch {
  public:
    LineSearch(const CostFunction &f, const GradientFunction &g, const OptimizerConfig &cfg,
               std::span<const double> x0, double phi0, std::span<const double> g0, std::span<const double> dir,
               OptimizationTrace &trace)
        : f_(f), g_(g), cfg_(cfg), x0_(x0), dir_(dir), phi0_(phi0), dphi0_(dot(g0, dir)), trace_(trace) {}

    /// A point satisfying the strong Wolfe conditions, or failing that the
    /// best point with sufficient decrease, or nothing.
    std::optional<LinePoint> run(double alpha1) {
        LinePoint prev{0.0, phi0_, dphi0_, {}, {}};
        double alpha = alpha1;
        for (std::size_t i = 1;; ++i) {
            if (!budget()) {
                return fallback();
            }
            LinePoint cur = probe(alpha);
            if (!std::isfinite(cur.phi) || cur.phi > phi0_ + cfg_.wolfe_c1 * alpha * dphi0_ ||
                (i > 1 && cur.phi >= prev.phi)) {
                return zoom(std::move(prev), std::move(cur));
            }
            with_gradient(cur);
            if (std::abs(*cur.dphi) <= -cfg_.wolfe_c2 * dphi0_) {
                return cur;
            }
            if (*cur.dphi >= 0.0) {
                return zoom(std::move(cur), std::move(prev));
            }
            consider(cur);
            prev = std::move(cur);
            alpha *= 2.0;
        }
    }

  private:
    bool budget() const { return steps_ < cfg_.max_linesearch_steps; }

    LinePoint probe(double alpha) {
        ++steps_;
        LinePoint p;
        p.alpha = alpha;
        p.x.resize(x0_.size());
        for (std::size_t k = 0; k < x0_.size(); ++k) {
            p.x[k] = x0_[k] + alpha * dir_[k];
        }
        p.phi = f_(p.x);
        ++trace_.function_evaluations;
        return p;
    }

    void with_gradient(LinePoint &p) {
        if (!p.g.empty()) {
            return;
        }
        p.g = g_(p.x);
        ++trace_.gradient_evaluations;
        p.dphi = dot(p.g, dir_);
    }

    void consider(const LinePoint &p) {
        if (p.alpha > 0.0 && std::isfinite(p.phi) && p.phi <= phi0_ + cfg_.wolfe_c1 * p.alpha * dphi0_ &&
            (!best_ || p.phi < best_->phi)) {
            best_ = p;
        }
    }

    std::optional<LinePoint> fallback() {
        if (best_) {
            with_gradient(*best_);
        }
        return best_;
    }

    // Minimizer of the cubic (or quadratic, without dphi at hi) through the
    // two endpoints, kept away from either end.
    static double interpolate(const LinePoint &lo, const LinePoint &hi) {
        const double a = lo.alpha;
        const double b = hi.alpha;
        const double width = b - a;
        double trial = std::numeric_limits<double>::quiet_NaN();
        if (hi.dphi && lo.dphi && std::isfinite(hi.phi)) {
            const double d1 = *lo.dphi + *hi.dphi - 3.0 * (lo.phi - hi.phi) / (a - b);
            const double disc = d1 * d1 - *lo.dphi * *hi.dphi;
            if (disc >= 0.0) {
                const double d2 = std::copysign(std::sqrt(disc), b - a);
                trial = b - (b - a) * (*hi.dphi + d2 - d1) / (*hi.dphi - *lo.dphi + 2.0 * d2);
            }
        } else if (lo.dphi && std::isfinite(hi.phi)) {
            const double denom = 2.0 * (hi.phi - lo.phi - *lo.dphi * width);
            if (denom > 0.0) {
                trial = a - *lo.dphi * width * width / denom;
            }
        }
        const double lo_edge = std::min(a, b) + 0.1 * std::abs(width);
        const double hi_edge = std::max(a, b) - 0.1 * std::abs(width);
        if (!std::isfinite(trial) || trial < lo_edge || trial > hi_edge) {
            trial = 0.5 * (a + b);
        }
        return trial;
    }

    std::optional<LinePoint> zoom(LinePoint lo, LinePoint hi) {
        consider(lo);
        while (budget()) {
            if (std::abs(hi.alpha - lo.alpha) < 1e-14 * std::max(1.0, std::abs(lo.alpha))) {
                break;
            }
            LinePoint cur = probe(interpolate(lo, hi));
            if (!std::isfinite(cur.phi) || cur.phi > phi0_ + cfg_.wolfe_c1 * cur.alpha * dphi0_ ||
                cur.phi >= lo.phi) {
                hi = std::move(cur);
                continue;
            }
            with_gradient(cur);
            if (std::abs(*cur.dphi) <= -cfg_.wolfe_c2 * dphi0_) {
                return cur;
            }
            consider(cur);
            if (*cur.dphi * (hi.alpha - lo.alpha) >= 0.0) {
                hi = std::move(lo);
            }
            lo = std::move(cur);
        }
        return fallback();
    }

    const CostFunction &f_;
    const GradientFunction &g_;
    const OptimizerConfig &cfg_;
    std::span<const double> x0_;
    std::span<const double> dir_;
    double phi0_;
    double dphi0_;
    OptimizationTrace &trace_;
    std::size_t steps_ = 0;
    std::optional<LinePoint> best_;
};

} // namespace

OptimizationResult minimize(const CostFunction &f, const GradientFunction &g, std::vector<double> x0,
                            const OptimizerConfig &cfg) {
    cfg.validate();
    const std::size_t n = x0.size();
    OptimizationResult res;
    res.x = std::move(x0);
    res.cost = f(res.x);
    res.gradient = g(res.x);
    res.trace.function_evaluations = 1;
    res.trace.gradient_evaluations = 1;
    if (!std::isfinite(res.cost) || res.gradient.size() != n || !all_finite(res.gradient)) {
        throw std::domain_error("cost or gradient is not finite at the starting point");
    }
    res.trace.records.push_back({0, res.cost, inf_norm(res.gradient), 0.0});

    // Dense inverse-Hessian approximation, row-major.
    std::vector<double> h(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        h[i * n + i] = 1.0;
    }
    bool rescaled = false;
    std::vector<double> dir(n);
    std::vector<double> hy(n);

    res.trace.status = OptimizerStatus::MaxIters;
    for (std::size_t iter = 1;; ++iter) {
        if (inf_norm(res.gradient) <= cfg.grad_tol) {
            res.trace.status = OptimizerStatus::GradConverged;
            break;
        }
        if (iter > cfg.max_iters) {
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                s -= h[i * n + j] * res.gradient[j];
            }
            dir[i] = s;
        }
        if (dot(dir, res.gradient) >= 0.0) {
            // Lost positive definiteness; restart from steepest descent.
            std::fill(h.begin(), h.end(), 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                h[i * n + i] = 1.0;
                dir[i] = -res.gradient[i];
            }
            rescaled = false;
        }
        const double alpha1 = iter == 1 ? std::min(1.0, 1.0 / std::sqrt(dot(res.gradient, res.gradient))) : 1.0;

        LineSearch ls(f, g, cfg, res.x, res.cost, res.gradient, dir, res.trace);
        std::optional<LinePoint> step = ls.run(alpha1);
        if (!step) {
            res.trace.status = OptimizerStatus::LineSearchFailed;
            break;
        }

        std::vector<double> s(n);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = step->x[i] - res.x[i];
            y[i] = step->g[i] - res.gradient[i];
        }
        const double ys = dot(y, s);
        const double yy = dot(y, y);
        if (ys > 1e-10 * std::sqrt(yy) * std::sqrt(dot(s, s))) {
            if (!rescaled) {
                const double gamma = ys / yy;
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        h[i * n + j] = i == j ? gamma : 0.0;
                    }
                }
                rescaled = true;
            }
            const double rho = 1.0 / ys;
            for (std::size_t i = 0; i < n; ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    acc += h[i * n + j] * y[j];
                }
                hy[i] = acc;
            }
            const double yhy = dot(y, hy);
            const double ss_coeff = rho * rho * yhy + rho;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    h[i * n + j] += -rho * (hy[i] * s[j] + s[i] * hy[j]) + ss_coeff * s[i] * s[j];
                }
            }
        }

        res.x = std::move(step->x);
        res.cost = step->phi;
        res.gradient = std::move(step->g);
        res.trace.records.push_back({iter, res.cost, inf_norm(res.gradient), step->alpha});
    }
    return res;
}

} // namespace wgvqd
