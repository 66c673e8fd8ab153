#pragma once
/*
 * fit.hpp
 *
 * Least-squares fit of y = a N + b log N + c, the expansion shape of the
 * volume-conjecture theorems.
 */

#include <cstdint>
#include <utility>
#include <vector>

namespace cjones {

struct FitResult {
    double a = 0.0;  // coefficient of N
    double b = 0.0;  // coefficient of log N
    double c = 0.0;  // constant
    double max_residual = 0.0;
    double rms_residual = 0.0;
    std::size_t n_points = 0;
    double N_min = 0.0, N_max = 0.0;
};

/// Householder-QR least squares on (N, y) pairs.  Requires >= 8 points with
/// distinct N; throws std::invalid_argument otherwise and std::runtime_error
/// on rank deficiency.
FitResult fit_asymptotic(const std::vector<std::pair<double, double>>& points);

}  // namespace cjones
