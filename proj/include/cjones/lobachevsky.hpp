#pragma once
/*
 * lobachevsky.hpp
 *
 * Lobachevsky function L(x) = -int_0^x log|2 sin u| du on [0, pi].
 */

namespace cjones {

/// L(x) with absolute error <= tol.  Throws std::domain_error outside [0, pi].
double lobachevsky(double x, double tol = 1e-13);

/// Thin callable wrapper carrying a fixed tolerance.
struct LobachevskyEvaluator {
    double tolerance = 1e-13;
    double operator()(double x) const { return lobachevsky(x, tolerance); }
};

}  // namespace cjones
