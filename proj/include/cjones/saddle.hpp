#pragma once
/*
 * saddle.hpp
 *
 * Saddle-point data entering the asymptotic analysis: the log-sine partial
 * sums s_n, the magnitude factor log S_{n,i}, the phase factor a_n and the
 * limit shape f(x,y) = -2L(x+y) + 2L(y) + L(x).
 */

#include <complex>
#include <cstdint>
#include <vector>

#include "cjones/ext_complex.hpp"

namespace cjones {

struct SaddleTable {
    std::int64_t N = 0;
    std::vector<double> s;  // s[n] = -sum_{j=1}^{n} log(2 sin(pi j/N)), n in [0, N)
};

/// Builds the s-table for order N >= 2 by compensated accumulation.
SaddleTable s_sequence(std::int64_t N);

/// log S_{n,i} = -2 s_{n+i} + 2 s_i + s_n.  Requires 0 <= n, i, n+i < N.
double big_s(const SaddleTable& table, std::int64_t n, std::int64_t i);
double big_s(std::int64_t N, std::int64_t n, std::int64_t i);

/// a_n = e^{ i pi n(n+1-N) / (2N) }, unit modulus.
std::complex<double> phase_a(std::int64_t N, std::int64_t n);

/// f(x,y) on 0 <= x, y, x+y <= pi, with error <= 5 tol.
double saddle_f(double x, double y, double tol = 1e-13);

/// max over 0 < n < alpha N of |s_n - (N/pi) L(pi n/N) + (1/2) log n|;
/// boundedness probe for the s-estimate lemma.
double sest_residual(std::int64_t N, double alpha);

/// J_{WL(r),N} via the phase/magnitude decomposition
///   -t^{-1/2} sum_n (2n+1) a_n^{4r-1} sum_i S_{n,i},
/// with S_{n,i} taken from the log-domain s-table and a_n from phase_a.
/// Independent route against the raw-product kernel; magnitudes must agree.
ExtComplex wl_at_root_decomposed(std::int64_t N, std::int64_t r);

}  // namespace cjones
