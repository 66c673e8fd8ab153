#include "cjones/saddle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cjones/lobachevsky.hpp"
#include "cjones/root_context.hpp"

namespace cjones {

SaddleTable s_sequence(std::int64_t N) {
    if (N < 2) throw std::domain_error("s_sequence: N must be >= 2");
    SaddleTable t;
    t.N = N;
    t.s.resize(static_cast<std::size_t>(N));
    t.s[0] = 0.0;
    const double pi_over_n = std::numbers::pi / static_cast<double>(N);
    double sum = 0.0, comp = 0.0;  // Kahan
    for (std::int64_t n = 1; n < N; ++n) {
        double term = -std::log(2.0 * std::sin(pi_over_n * static_cast<double>(n)));
        double y = term - comp;
        double v = sum + y;
        comp = (v - sum) - y;
        sum = v;
        t.s[static_cast<std::size_t>(n)] = sum;
    }
    return t;
}

double big_s(const SaddleTable& table, std::int64_t n, std::int64_t i) {
    if (n < 0 || i < 0 || n + i >= table.N)
        throw std::domain_error("big_s: need 0 <= n, i and n+i < N");
    return -2.0 * table.s[static_cast<std::size_t>(n + i)] +
           2.0 * table.s[static_cast<std::size_t>(i)] +
           table.s[static_cast<std::size_t>(n)];
}

double big_s(std::int64_t N, std::int64_t n, std::int64_t i) {
    return big_s(s_sequence(N), n, i);
}

std::complex<double> phase_a(std::int64_t N, std::int64_t n) {
    if (n < 0 || n >= N) throw std::domain_error("phase_a: need 0 <= n < N");
    std::int64_t k = umod(n * (n + 1 - N), 4 * N);
    double th = std::numbers::pi * static_cast<double>(k) / (2.0 * static_cast<double>(N));
    return {std::cos(th), std::sin(th)};
}

double saddle_f(double x, double y, double tol) {
    constexpr double pi = std::numbers::pi;
    if (x < 0.0 || y < 0.0 || x + y > pi * (1.0 + 1e-15))
        throw std::domain_error("saddle_f: need 0 <= x, y, x+y <= pi");
    return -2.0 * lobachevsky(std::min(x + y, pi), tol) + 2.0 * lobachevsky(y, tol) +
           lobachevsky(x, tol);
}

double sest_residual(std::int64_t N, double alpha) {
    if (alpha <= 0.0 || alpha >= 1.0)
        throw std::domain_error("sest_residual: need 0 < alpha < 1");
    SaddleTable t = s_sequence(N);
    const double pi_over_n = std::numbers::pi / static_cast<double>(N);
    double worst = 0.0;
    for (std::int64_t n = 1; n < static_cast<std::int64_t>(alpha * static_cast<double>(N)); ++n) {
        double model = static_cast<double>(N) / std::numbers::pi *
                           lobachevsky(pi_over_n * static_cast<double>(n)) -
                       0.5 * std::log(static_cast<double>(n));
        worst = std::max(worst, std::abs(t.s[static_cast<std::size_t>(n)] - model));
    }
    return worst;
}

ExtComplex wl_at_root_decomposed(std::int64_t N, std::int64_t r) {
    if (N < 1) throw std::domain_error("wl_at_root_decomposed: N must be >= 1");
    if (N == 1) return ExtComplex::from_double(1.0);
    SaddleTable tab = s_sequence(N);
    ExtComplex total;
    for (std::int64_t n = 0; n < N; ++n) {
        // a_n^{4r-1}: exponent (4r-1) n(n+1-N) mod 4N in half-pi/N units
        std::int64_t k = umod((4 * r - 1) * n * (n + 1 - N), 4 * N);
        double th = std::numbers::pi * static_cast<double>(k) /
                    (2.0 * static_cast<double>(N));
        std::complex<double> an{std::cos(th), std::sin(th)};
        ExtReal inner;
        for (std::int64_t i = 0; i <= N - 1 - n; ++i)
            inner = inner + ExtReal::from_log(big_s(tab, n, i));
        ExtComplex term = ExtComplex::from_ext_real(inner) *
                          (an * static_cast<double>(2 * n + 1));
        total = ext_add(total, term);
    }
    // -t^{-1/2} = -e^{-i pi/N}
    double th = -std::numbers::pi / static_cast<double>(N);
    return total * (-std::complex<double>{std::cos(th), std::sin(th)});
}

}  // namespace cjones
