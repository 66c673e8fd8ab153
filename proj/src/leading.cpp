#include "cjones/leading.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cjones/root_context.hpp"
#include "cjones/torus.hpp"

namespace cjones {

namespace {

void check_pq(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw std::domain_error("A_{p,q}: p, q must be positive and coprime");
}

// e^{-i pi N j^2/(2pq)} with the exponent reduced mod 4pq exactly.
std::complex<double> gauss_phase(std::int64_t p, std::int64_t q, std::int64_t N,
                                 std::int64_t j) {
    std::int64_t m = 4 * p * q;
    std::int64_t k = umod(-N * j * j, m);
    double th = std::numbers::pi * static_cast<double>(k) /
                (2.0 * static_cast<double>(p * q));
    return {std::cos(th), std::sin(th)};
}

}  // namespace

std::complex<double> a_sum_float(std::int64_t p, std::int64_t q, std::int64_t N,
                                 int k, int sign) {
    check_pq(p, q);
    if (k != 0 && k != 1) throw std::domain_error("a_sum_float: k must be 0 or 1");
    if (sign != 1 && sign != -1) throw std::domain_error("a_sum_float: sign must be +-1");
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t j = 1; j < p * q; ++j) {
        double sgn = (sign == -1 && (j & 1)) ? -1.0 : 1.0;
        double jk = (k == 1) ? static_cast<double>(j * j) : 1.0;
        acc += sgn * jk * gauss_phase(p, q, N, j) *
               std::sin(std::numbers::pi * static_cast<double>(j) / static_cast<double>(p)) *
               std::sin(std::numbers::pi * static_cast<double>(j) / static_cast<double>(q));
    }
    return acc;
}

ExtComplex kt_leading(std::int64_t p, std::int64_t q, std::int64_t N) {
    check_pq(p, q);
    if (N < 1) throw std::domain_error("kt_leading: N must be >= 1");
    int sign = (N % 2 == 0) ? -1 : +1;  // (-1)^{N-1}
    std::complex<double> A = a_sum_float(p, q, N, 1, sign);
    // e^{-i pi pq(N^2-1)/(2N)}: reduce pq(N^2-1) mod 4N exactly
    std::int64_t kk = umod(-p * q * (N * N - 1), 4 * N);
    double th1 = std::numbers::pi * static_cast<double>(kk) / (2.0 * static_cast<double>(N));
    std::complex<double> ph1{std::cos(th1), std::sin(th1)};
    double pq = static_cast<double>(p * q);
    double th2 = -(static_cast<double>(p) / static_cast<double>(q) +
                   static_cast<double>(q) / static_cast<double>(p)) *
                     std::numbers::pi / (2.0 * static_cast<double>(N)) +
                 std::numbers::pi / 4.0;
    std::complex<double> ph2{std::cos(th2), std::sin(th2)};
    double amp = 2.0 * std::pow(static_cast<double>(N) / (2.0 * pq), 1.5);
    return ExtComplex::from_complex(amp * ph1 * ph2 * A);
}

ExtComplex deriv_leading(std::int64_t p, std::int64_t q, std::int64_t n, std::int64_t N) {
    check_pq(p, q);
    if (N < 1 || n < 1) throw std::domain_error("deriv_leading: need n, N >= 1");
    if (std::llabs(n - N) * 2 * p * q >= N)
        throw std::domain_error("deriv_leading: n outside the uniformity window |n-N| < N/(2pq)");
    int sign = (n % 2 == 0) ? -1 : +1;  // (-1)^{n-1}
    std::complex<double> A = a_sum_float(p, q, N, 1, sign);
    std::int64_t kk = umod(-p * q * (n * n - 1), 4 * N);
    double th1 = std::numbers::pi * static_cast<double>(kk) / (2.0 * static_cast<double>(N));
    std::complex<double> ph1{std::cos(th1), std::sin(th1)};
    double pq = static_cast<double>(p * q);
    double th2 = -(static_cast<double>(p) / static_cast<double>(q) +
                   static_cast<double>(q) / static_cast<double>(p)) *
                     std::numbers::pi / (2.0 * static_cast<double>(N)) +
                 std::numbers::pi / 4.0;
    std::complex<double> ph2{std::cos(th2), std::sin(th2)};
    double amp = -2.0 * std::pow(static_cast<double>(N), 2.5) / std::pow(2.0 * pq, 1.5);
    return ExtComplex::from_complex(amp * ph1 * ph2 * A);
}

RatioScanResult ratio_conjecture_scan(std::int64_t p, std::int64_t q, std::int64_t N,
                                      double delta) {
    check_pq(p, q);
    if (!(delta > 0.5 && delta < 2.0 / 3.0))
        throw std::domain_error("ratio_conjecture_scan: need 1/2 < delta < 2/3");
    if (N < 2) throw std::domain_error("ratio_conjecture_scan: N must be >= 2");
    const double half = static_cast<double>(N) / 2.0;
    const double width = std::pow(static_cast<double>(N), delta);
    RootContext ctx(N);
    TorusKnotSpec spec(p, q);

    std::vector<std::pair<std::complex<double>, std::complex<double>>> pairs;
    for (std::int64_t n = 0; n < N; ++n) {
        if (std::abs(static_cast<double>(n) - half) >= width) continue;
        pairs.push_back(torus_hat_pair(spec, 2 * n + 1, ctx));
    }
    if (pairs.empty()) throw std::domain_error("ratio_conjecture_scan: empty window");

    double dmax = 0.0;
    for (const auto& [h, d] : pairs) dmax = std::max(dmax, std::abs(d));
    RatioScanResult res;
    res.window = static_cast<std::int64_t>(pairs.size());
    double worst = 0.0;
    for (const auto& [h, d] : pairs) {
        if (std::abs(d) < 1e-12 * dmax) {
            ++res.excluded;
            continue;
        }
        worst = std::max(worst, std::abs(h) / std::abs(d));
    }
    res.value = static_cast<double>(N) * static_cast<double>(N) * worst;
    return res;
}

}  // namespace cjones
