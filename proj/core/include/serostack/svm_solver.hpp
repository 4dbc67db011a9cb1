#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace serostack {

// RBF kernel exp(-gamma * ||x - z||^2).
double rbf_kernel(std::span<const double> x, std::span<const double> z, double gamma);

// Binary soft-margin dual solution over a precomputed kernel matrix.
struct SmoResult {
    std::vector<double> alpha;
    double bias = 0.0;
    int passes = 0; // full passes actually executed
};

struct SmoSettings {
    double c = 1.0;
    double kkt_tol = 1e-3;
    int max_passes = 100;
};

// Platt-style sequential minimal optimization with deterministic working-set
// selection. kernel is the dense n x n Gram matrix (row-major); y holds +1/-1.
SmoResult smo_solve(std::span<const double> kernel, std::span<const double> y,
                    const SmoSettings& settings);

// Dual objective sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij.
double svm_dual_objective(std::span<const double> kernel, std::span<const double> y,
                          std::span<const double> alpha);

// Largest KKT violation of the solution (0 when optimal within tolerance).
double svm_max_kkt_violation(std::span<const double> kernel, std::span<const double> y,
                             std::span<const double> alpha, double bias, double c);

} // namespace serostack
