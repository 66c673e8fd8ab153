#include "cjones/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace cjones {

FitResult fit_asymptotic(const std::vector<std::pair<double, double>>& points) {
    const std::size_t m = points.size();
    if (m < 8) throw std::invalid_argument("fit_asymptotic: need at least 8 points");
    {
        std::set<double> distinct;
        for (const auto& [N, y] : points) {
            if (!(N > 0.0)) throw std::invalid_argument("fit_asymptotic: N must be positive");
            distinct.insert(N);
        }
        if (distinct.size() != m)
            throw std::invalid_argument("fit_asymptotic: N values must be distinct");
    }

    // Columns: N, log N, 1.  Householder QR in long double.
    constexpr std::size_t kCols = 3;
    std::vector<std::array<long double, kCols>> A(m);
    std::vector<long double> y(m);
    for (std::size_t i = 0; i < m; ++i) {
        A[i] = {static_cast<long double>(points[i].first),
                std::log(static_cast<long double>(points[i].first)), 1.0L};
        y[i] = static_cast<long double>(points[i].second);
    }

    for (std::size_t k = 0; k < kCols; ++k) {
        long double norm = 0.0L;
        for (std::size_t i = k; i < m; ++i) norm += A[i][k] * A[i][k];
        norm = std::sqrt(norm);
        if (norm == 0.0L) throw std::runtime_error("fit_asymptotic: rank-deficient design");
        long double alpha = (A[k][k] > 0) ? -norm : norm;
        std::vector<long double> v(m, 0.0L);
        v[k] = A[k][k] - alpha;
        for (std::size_t i = k + 1; i < m; ++i) v[i] = A[i][k];
        long double vtv = 0.0L;
        for (std::size_t i = k; i < m; ++i) vtv += v[i] * v[i];
        if (vtv == 0.0L) throw std::runtime_error("fit_asymptotic: rank-deficient design");
        for (std::size_t j = k; j < kCols; ++j) {
            long double dot = 0.0L;
            for (std::size_t i = k; i < m; ++i) dot += v[i] * A[i][j];
            long double f = 2.0L * dot / vtv;
            for (std::size_t i = k; i < m; ++i) A[i][j] -= f * v[i];
        }
        long double dot = 0.0L;
        for (std::size_t i = k; i < m; ++i) dot += v[i] * y[i];
        long double f = 2.0L * dot / vtv;
        for (std::size_t i = k; i < m; ++i) y[i] -= f * v[i];
    }

    // Back substitution on the 3x3 upper triangle.
    long double coeff[kCols];
    for (int k = kCols - 1; k >= 0; --k) {
        long double rhs = y[static_cast<std::size_t>(k)];
        for (std::size_t j = static_cast<std::size_t>(k) + 1; j < kCols; ++j)
            rhs -= A[static_cast<std::size_t>(k)][j] * coeff[j];
        long double diag = A[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        if (std::abs(diag) < 1e-14L)
            throw std::runtime_error("fit_asymptotic: rank-deficient design");
        coeff[static_cast<std::size_t>(k)] = rhs / diag;
    }

    FitResult r;
    r.a = static_cast<double>(coeff[0]);
    r.b = static_cast<double>(coeff[1]);
    r.c = static_cast<double>(coeff[2]);
    r.n_points = m;
    r.N_min = points.front().first;
    r.N_max = points.front().first;
    long double sumsq = 0.0L;
    for (const auto& [N, yv] : points) {
        r.N_min = std::min(r.N_min, N);
        r.N_max = std::max(r.N_max, N);
        double pred = r.a * N + r.b * std::log(N) + r.c;
        double res = yv - pred;
        r.max_residual = std::max(r.max_residual, std::abs(res));
        sumsq += static_cast<long double>(res) * res;
    }
    r.rms_residual = static_cast<double>(std::sqrt(sumsq / static_cast<long double>(m)));
    return r;
}

}  // namespace cjones
