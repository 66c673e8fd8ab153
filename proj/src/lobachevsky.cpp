#include "cjones/lobachevsky.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cjones {

namespace {

// zeta(2m) for m = 1..kZetaTerms, filled on first use.
constexpr int kZetaTerms = 160;

const std::vector<double>& zeta_even_table() {
    static const std::vector<double> table = [] {
        std::vector<double> z(kZetaTerms + 1, 0.0);
        for (int m = 1; m <= kZetaTerms; ++m)
            z[m] = std::riemann_zeta(2.0 * m);
        return z;
    }();
    return table;
}

// Core series, valid for 0 <= x <= 3 pi/4:
//   L(x) = x - x log(2x) + sum_{m>=1} zeta(2m) x^{2m+1} / (m (2m+1) pi^{2m}).
// The sum integrates -log(sin u / u) termwise; the ratio of consecutive
// terms is bounded by u = (x/pi)^2 <= 9/16, so the tail after M terms is
// at most zeta(2) * x * u^{M+1} / ((M+1)(2M+3)(1-u)).
double lobachevsky_core(double x, double tol) {
    if (x == 0.0) return 0.0;
    const double u = (x / std::numbers::pi) * (x / std::numbers::pi);
    double sum = 0.0;
    double upow = u;
    const auto& zeta = zeta_even_table();
    for (int m = 1; m <= kZetaTerms; ++m) {
        double term = zeta[m] * x * upow / (m * (2.0 * m + 1.0));
        sum += term;
        double tail = zeta[1] * x * upow * u /
                      ((m + 1.0) * (2.0 * m + 3.0) * (1.0 - u));
        if (tail <= tol * 0.5) break;
        upow *= u;
    }
    return x - x * std::log(2.0 * x) + sum;
}

}  // namespace

double lobachevsky(double x, double tol) {
    constexpr double pi = std::numbers::pi;
    if (tol <= 0.0) throw std::domain_error("lobachevsky: tol must be positive");
    if (x < 0.0 || x > pi * (1.0 + 1e-15))
        throw std::domain_error("lobachevsky: x outside [0, pi]");
    if (x > 0.75 * pi) return -lobachevsky_core(pi - x, tol);  // L(x) = -L(pi-x)
    return lobachevsky_core(x, tol);
}

}  // namespace cjones
