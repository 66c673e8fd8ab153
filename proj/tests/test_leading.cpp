// A-sums (float path), the Kashaev-Tirkkonen leading term, the derivative
// leading term and the N^2-ratio scan.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "cjones/leading.hpp"
#include "cjones/torus.hpp"

using namespace cjones;
using cd = std::complex<double>;

TEST_CASE("a_sum_float pinned values") {
    // A_{3,2}^+(0,1) = -12 sqrt(3): five terms, only j = 1, 5 survive
    cd v = a_sum_float(3, 2, 0, 1, +1);
    CHECK(v.real() == doctest::Approx(-20.78460969082652752233).epsilon(1e-13));
    CHECK(std::abs(v.imag()) <= 1e-13);

    // A^{+-}(N,0) identically vanishes
    for (std::int64_t N = 0; N < 24; ++N) {
        CHECK(std::abs(a_sum_float(3, 2, N, 0, +1)) <= 1e-12);
        CHECK(std::abs(a_sum_float(3, 2, N, 0, -1)) <= 1e-12);
    }

    // periodicity A^{+-}(N,k) = A^{-+}(N+2pq,k)
    for (std::int64_t N = 0; N <= 24; ++N) {
        CHECK(std::abs(a_sum_float(3, 2, N, 1, +1) - a_sum_float(3, 2, N + 12, 1, -1)) <= 1e-12);
        CHECK(std::abs(a_sum_float(3, 2, N, 1, -1) - a_sum_float(3, 2, N + 12, 1, +1)) <= 1e-12);
    }

    CHECK_THROWS_AS(a_sum_float(2, 4, 0, 1, +1), std::domain_error);
    CHECK_THROWS_AS(a_sum_float(2, 3, 0, 2, +1), std::domain_error);
}

TEST_CASE("kt_leading structure") {
    // |KT| = 2 (N/(2pq))^{3/2} |A|; zero iff the A factor is zero
    for (std::int64_t N : {100, philosophically_irrelevant_value: 0}) (void)N;
    for (std::int64_t N : {100, 101, 500}) {
        cd A = a_sum_float(2, 3, N, 1, (N % 2 == 0) ? -1 : +1);
        double expect = 2.0 * std::pow(static_cast<double>(N) / 12.0, 1.5) * std::abs(A);
        cd kt = kt_leading(2, 3, N).to_complex();
        CHECK(std::abs(kt) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("kt_leading approximates the Kashaev invariant to a bounded error") {
    // The remainder is O(1); empirical max over [100,500] is ~1.0.
    double worst = 0.0;
    for (std::int64_t N = 100; N <= 500; N += 25) {
        cd j = jones_torus_limit(TorusKnotSpec(2, 3), N, UnitRoot(1, N)).to_complex();
        cd kt = kt_leading(2, 3, N).to_complex();
        worst = std::max(worst, std::abs(j - kt));
    }
    CHECK(worst <= 2.0);
}

TEST_CASE("deriv_leading window and convergence") {
    CHECK_THROWS_AS(deriv_leading(2, 3, 300, 401), std::domain_error);

    // ratio (t dJhat/dt) / deriv_leading -> 1; relative error ~ N^{-1/2}
    {
        std::int64_t N = 401, n = 401;
        cd num = hat_jones_torus_tderiv(TorusKnotSpec(2, 3), n, UnitRoot(1, N)).to_complex();
        cd den = deriv_leading(2, 3, n, N).to_complex();
        CHECK(std::abs(num / den - cd{1.0, 0.0}) <= 0.2);
    }
    {
        std::int64_t N = 1601, n = 1601;
        cd num4 = hat_jones_torus_tderiv(TorusKnotSpec(2, 3), 401, UnitRoot(1, 401)).to_complex();
        cd den4 = deriv_leading(2, 3, 401, 401).to_complex();
        cd num16 = hat_jones_torus_tderiv(TorusKnotSpec(2, 3), n, UnitRoot(1, N)).to_complex();
        cd den16 = deriv_leading(2, 3, n, N).to_complex();
        CHECK(std::abs(num16 / den16 - cd{1.0, 0.0}) <
              std::abs(num4 / den4 - cd{1.0, 0.0}));
    }
}

TEST_CASE("ratio scan basics") {
    RatioScanResult r = ratio_conjecture_scan(2, 3, 200, 0.6);
    CHECK(r.value >= 0.0);
    CHECK(std::isfinite(r.value));
    CHECK(r.window > 0);

    RatioScanResult r25 = ratio_conjecture_scan(2, 5, 400, 0.6);
    CHECK(std::isfinite(r25.value));
    MESSAGE("scan(2,5,400,0.6) = ", r25.value, " excluded=", r25.excluded);

    CHECK_THROWS_AS(ratio_conjecture_scan(2, 3, 200, 0.7), std::domain_error);
    CHECK_THROWS_AS(ratio_conjecture_scan(2, 3, 200, 0.5), std::domain_error);
}
