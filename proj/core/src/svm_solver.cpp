#include "serostack/svm_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace serostack {

double rbf_kernel(std::span<const double> x, std::span<const double> z, double gamma) {
    if (x.size() != z.size()) throw std::invalid_argument("rbf_kernel: dimension mismatch");
    if (!(gamma > 0.0)) throw std::invalid_argument("rbf_kernel: gamma must be positive");
    double sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - z[i];
        sq += d * d;
    }
    return std::exp(-gamma * sq);
}

namespace {

class SmoSolver {
public:
    SmoSolver(std::span<const double> kernel, std::span<const double> y,
              const SmoSettings& settings)
        : k_(kernel), y_(y), n_(y.size()), c_(settings.c), tol_(settings.kkt_tol),
          alpha_(n_, 0.0), error_(n_) {
        // f(x_i) = 0 initially, so E_i = -y_i.
        for (std::size_t i = 0; i < n_; ++i) error_[i] = -y_[i];
    }

    SmoResult run(int max_passes) {
        int passes = 0;
        bool examine_all = true;
        while (passes < max_passes) {
            ++passes;
            std::size_t changed = 0;
            for (std::size_t i = 0; i < n_; ++i) {
                if (!examine_all && (alpha_[i] <= 0.0 || alpha_[i] >= c_)) continue;
                changed += examine(i);
            }
            if (examine_all) {
                if (changed == 0) break; // KKT satisfied everywhere
                examine_all = false;
            } else if (changed == 0) {
                examine_all = true;
            }
        }
        return {alpha_, bias_, passes};
    }

private:
    double kernel(std::size_t i, std::size_t j) const { return k_[i * n_ + j]; }

    bool violates_kkt(std::size_t i) const {
        const double r = error_[i] * y_[i]; // y_i f(x_i) - 1
        return (r < -tol_ && alpha_[i] < c_) || (r > tol_ && alpha_[i] > 0.0);
    }

    std::size_t examine(std::size_t i2) {
        if (!violates_kkt(i2)) return 0;

        // Second choice: largest |E1 - E2| among non-bound points.
        std::size_t best = n_;
        double best_gap = -1.0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == i2 || alpha_[i] <= 0.0 || alpha_[i] >= c_) continue;
            const double gap = std::abs(error_[i] - error_[i2]);
            if (gap > best_gap) {
                best_gap = gap;
                best = i;
            }
        }
        if (best < n_ && take_step(best, i2)) return 1;

        // Fall back to scanning non-bound points, then all points.
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == i2 || alpha_[i] <= 0.0 || alpha_[i] >= c_) continue;
            if (take_step(i, i2)) return 1;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == i2) continue;
            if (take_step(i, i2)) return 1;
        }
        return 0;
    }

    bool take_step(std::size_t i1, std::size_t i2) {
        const double a1 = alpha_[i1], a2 = alpha_[i2];
        const double y1 = y_[i1], y2 = y_[i2];
        const double e1 = error_[i1], e2 = error_[i2];
        const double s = y1 * y2;

        double lo, hi;
        if (s > 0.0) {
            lo = std::max(0.0, a1 + a2 - c_);
            hi = std::min(c_, a1 + a2);
        } else {
            lo = std::max(0.0, a2 - a1);
            hi = std::min(c_, c_ + a2 - a1);
        }
        if (lo >= hi) return false;

        const double k11 = kernel(i1, i1), k22 = kernel(i2, i2), k12 = kernel(i1, i2);
        const double eta = k11 + k22 - 2.0 * k12;
        if (eta <= 1e-12) return false; // duplicate points under an RBF kernel

        double a2_new = std::clamp(a2 + y2 * (e1 - e2) / eta, lo, hi);
        if (std::abs(a2_new - a2) < 1e-12 * (a2_new + a2 + 1e-12)) return false;
        const double a1_new = a1 + s * (a2 - a2_new);

        const double d1 = a1_new - a1, d2 = a2_new - a2;
        const double b1 = bias_ - e1 - y1 * d1 * k11 - y2 * d2 * k12;
        const double b2 = bias_ - e2 - y1 * d1 * k12 - y2 * d2 * k22;
        double bias_new;
        if (a1_new > 0.0 && a1_new < c_)
            bias_new = b1;
        else if (a2_new > 0.0 && a2_new < c_)
            bias_new = b2;
        else
            bias_new = 0.5 * (b1 + b2);

        const double db = bias_new - bias_;
        for (std::size_t i = 0; i < n_; ++i)
            error_[i] += y1 * d1 * kernel(i1, i) + y2 * d2 * kernel(i2, i) + db;

        alpha_[i1] = a1_new;
        alpha_[i2] = a2_new;
        bias_ = bias_new;
        return true;
    }

    std::span<const double> k_;
    std::span<const double> y_;
    std::size_t n_;
    double c_;
    double tol_;
    std::vector<double> alpha_;
    std::vector<double> error_; // E_i = f(x_i) - y_i
    double bias_ = 0.0;
};

} // namespace

SmoResult smo_solve(std::span<const double> kernel, std::span<const double> y,
                    const SmoSettings& settings) {
    if (y.empty()) throw std::invalid_argument("smo_solve: empty problem");
    if (kernel.size() != y.size() * y.size())
        throw std::invalid_argument("smo_solve: kernel size mismatch");
    SmoSolver solver(kernel, y, settings);
    return solver.run(settings.max_passes);
}

double svm_dual_objective(std::span<const double> kernel, std::span<const double> y,
                          std::span<const double> alpha) {
    const std::size_t n = y.size();
    double obj = 0.0;
    for (std::size_t i = 0; i < n; ++i) obj += alpha[i];
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j)
            obj -= 0.5 * alpha[i] * alpha[j] * y[i] * y[j] * kernel[i * n + j];
    }
    return obj;
}

double svm_max_kkt_violation(std::span<const double> kernel, std::span<const double> y,
                             std::span<const double> alpha, double bias, double c) {
    const std::size_t n = y.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double f = bias;
        for (std::size_t j = 0; j < n; ++j) f += alpha[j] * y[j] * kernel[i * n + j];
        const double r = y[i] * f - 1.0;
        double violation = 0.0;
        if (alpha[i] <= 0.0)
            violation = std::max(0.0, -r);
        else if (alpha[i] >= c)
            violation = std::max(0.0, r);
        else
            violation = std::abs(r);
        worst = std::max(worst, violation);
    }
    return worst;
}

} // namespace serostack
