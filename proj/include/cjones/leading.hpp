#pragma once
/*
 * leading.hpp
 *
 * The finite exponential sums A_{p,q}^{+-}(N,k), the Kashaev-Tirkkonen
 * leading term for torus-knot Kashaev invariants, the analogous leading
 * term of t d/dt Jhat, and the N^2-ratio scan behind the closing
 * conjecture.
 */

#include <complex>
#include <cstdint>

#include "cjones/ext_complex.hpp"

namespace cjones {

/// A_{p,q}^{sign}(N,k) = sum_{j=1}^{pq-1} (sign)^j e^{-i pi N j^2/(2pq)}
///                       j^{2k} sin(j pi/p) sin(j pi/q);  sign = +-1.
std::complex<double> a_sum_float(std::int64_t p, std::int64_t q, std::int64_t N,
                                 int k, int sign);

/// Closed-form leading term of J_{T(p,q),N}(e^{2 pi i/N}):
///   2 e^{-i pi pq(N^2-1)/(2N)} (N/(2pq))^{3/2}
///     e^{-i (p/q+q/p) pi/(2N) + i pi/4} A^{(-1)^{N-1}}(N,1).
ExtComplex kt_leading(std::int64_t p, std::int64_t q, std::int64_t N);

/// Leading term of t d/dt Jhat_{T(p,q),n} at t = e^{2 pi i/N}:
///   -2 e^{-i pi pq(n^2-1)/(2N)} N^{5/2}/(2pq)^{3/2}
///     e^{-i (p/q+q/p) pi/(2N) + i pi/4} A^{(-1)^{n-1}}(N,1).
/// Valid only on |n - N| < N/(2pq); throws outside the window.
ExtComplex deriv_leading(std::int64_t p, std::int64_t q, std::int64_t n, std::int64_t N);

struct RatioScanResult {
    double value = 0.0;       // N^2 * max ratio over the window
    std::int64_t excluded = 0;  // points skipped for near-zero denominators
    std::int64_t window = 0;    // points scanned
};

/// N^2 max over |n - N/2| < N^delta of |Jhat_{T,2n+1} / (t d/dt Jhat_{T,2n+1})|
/// at t = e^{2 pi i/N}; n with |denominator| < 1e-12 of the window maximum
/// are excluded and counted.  Requires 1/2 < delta < 2/3.
RatioScanResult ratio_conjecture_scan(std::int64_t p, std::int64_t q, std::int64_t N,
                                      double delta);

}  // namespace cjones
