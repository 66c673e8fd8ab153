// Morton's torus-knot sum, the hat form and its t-derivative.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "cjones/torus.hpp"

using namespace cjones;
using cd = std::complex<double>;

namespace {

// Independent brute-force oracle: Morton's formula transcribed directly with
// double-precision angle arithmetic (k as a half-integer double), sharing no
// code with the UnitRoot/quarter-exponent implementation path.
cd brute_pow(double angle_turns, double x) {
    double th = 2.0 * std::numbers::pi * angle_turns * x;
    return {std::cos(th), std::sin(th)};
}

cd brute_hat(std::int64_t p, std::int64_t q, std::int64_t n, std::int64_t j, std::int64_t M) {
    double turns = static_cast<double>(j) / static_cast<double>(M);
    cd acc{0.0, 0.0};
    double pref = -static_cast<double>(p * q) * (static_cast<double>(n) * n - 1.0) / 4.0;
    for (double k = -(static_cast<double>(n) - 1.0) / 2.0;
         k <= (static_cast<double>(n) - 1.0) / 2.0 + 0.25; k += 1.0) {
        double e = static_cast<double>(p) * k * (static_cast<double>(q) * k + 1.0);
        acc += brute_pow(turns, pref + e + q * k + 0.5) - brute_pow(turns, pref + e - q * k - 0.5);
    }
    return acc;
}

cd brute_jones(std::int64_t p, std::int64_t q, std::int64_t n, std::int64_t j, std::int64_t M) {
    double turns = static_cast<double>(j) / static_cast<double>(M);
    cd den = brute_pow(turns, static_cast<double>(n) / 2.0) -
             brute_pow(turns, -static_cast<double>(n) / 2.0);
    return brute_hat(p, q, n, j, M) / den;
}

}  // namespace

TEST_CASE("trivial coloring gives 1") {
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {3, 4}, {2, 7}}) {
        TorusKnotSpec s(p, q);
        cd v = jones_torus(s, 1, UnitRoot(1, 7)).to_complex();
        CHECK(std::abs(v - cd{1.0, 0.0}) <= 1e-14);
    }
}

TEST_CASE("jones_torus matches the independent Morton oracle") {
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {3, 4}, {2, 5}}) {
        TorusKnotSpec s(p, q);
        for (std::int64_t n : {2, 3, 5, 8}) {
            for (auto [j, M] : {std::pair<std::int64_t, std::int64_t>{1, 7}, {2, 9}, {3, 11}}) {
                cd mine = jones_torus(s, n, UnitRoot(j, M)).to_complex();
                cd ref = brute_jones(p, q, n, j, M);
                CHECK(std::abs(mine - ref) <= 1e-10 * std::abs(ref));
            }
        }
    }
}

TEST_CASE("singular point: trefoil determinant at t = -1") {
    TorusKnotSpec s(2, 3);
    CHECK_THROWS_AS(jones_torus(s, 2, UnitRoot(1, 2)), SingularEvaluation);
    cd v = jones_torus_limit(s, 2, UnitRoot(1, 2)).to_complex();
    CHECK(std::abs(v) == doctest::Approx(3.0).epsilon(1e-12));  // det(trefoil) = 3
}

TEST_CASE("T(p,q) = T(q,p)") {
    cd a = jones_torus(TorusKnotSpec(2, 3), 5, UnitRoot(1, 7)).to_complex();
    cd b = jones_torus(TorusKnotSpec(3, 2), 5, UnitRoot(1, 7)).to_complex();
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));

    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 5}, {3, 4}, {5, 7}, {4, 7}}) {
        for (std::int64_t n : {3, 10, 30}) {
            cd x = jones_torus(TorusKnotSpec(p, q), n, UnitRoot(2, 13)).to_complex();
            cd y = jones_torus(TorusKnotSpec(q, p), n, UnitRoot(2, 13)).to_complex();
            CHECK(std::abs(x - y) <= 1e-10 * std::abs(x));
        }
    }
}

TEST_CASE("hat form") {
    // n=1 at t=1 (angle 0): Jhat = t^{1/2} - t^{-1/2} = 0
    CHECK(hat_jones_torus(TorusKnotSpec(2, 3), 1, UnitRoot(0, 1)).is_zero());

    // independent re-summation at a generic root
    cd mine = hat_jones_torus(TorusKnotSpec(2, 3), 3, UnitRoot(1, 5)).to_complex();
    cd ref = brute_hat(2, 3, 3, 1, 5);
    CHECK(std::abs(mine - ref) <= 1e-12 * (1.0 + std::abs(ref)));

    // root vanishing: Jhat_{T(2,3),N}(zeta_N) = 0; summands have modulus 1
    for (std::int64_t N : {25, 40, 97}) {
        ExtComplex h = hat_jones_torus(TorusKnotSpec(2, 3), N, UnitRoot(1, N));
        double mag = h.is_zero() ? 0.0 : std::abs(h.to_complex());
        CHECK(mag <= 1e-9 * 2.0);
    }
}

TEST_CASE("hat t-derivative") {
    // n=1, t=1: t d/dt (t^{1/2}-t^{-1/2}) = (t^{1/2}+t^{-1/2})/2 = 1
    cd d = hat_jones_torus_tderiv(TorusKnotSpec(2, 3), 1, UnitRoot(0, 1)).to_complex();
    CHECK(std::abs(d - cd{1.0, 0.0}) <= 1e-14);

    // J_{T,1} == 1, so the n=1 derivative is companion-independent
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 5}, {3, 4}, {7, 9}}) {
        cd dd = hat_jones_torus_tderiv(TorusKnotSpec(p, q), 1, UnitRoot(1, 6)).to_complex();
        cd ref = hat_jones_torus_tderiv(TorusKnotSpec(2, 3), 1, UnitRoot(1, 6)).to_complex();
        CHECK(std::abs(dd - ref) <= 1e-14);
    }
}

TEST_CASE("derivative identity t dJhat/dt = -N J at the Kashaev point") {
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
        for (std::int64_t N : {20, 57, 200}) {
            TorusKnotSpec s(p, q);
            UnitRoot t(1, N);
            cd lhs = hat_jones_torus_tderiv(s, N, t).to_complex();
            cd lim = jones_torus_limit(s, N, t).to_complex();
            CHECK(std::abs(lhs - (-static_cast<double>(N)) * lim) <= 1e-9 * std::abs(lhs));
        }
    }
}

TEST_CASE("kashaev_torus record") {
    JonesValue v = kashaev_torus(TorusKnotSpec(2, 3), 25);
    CHECK(v.N == 25);
    CHECK(v.log_abs == doctest::Approx(ext_log_abs(v.value)));
    CHECK(v.two_pi_log_over_N ==
          doctest::Approx(2.0 * std::numbers::pi * v.log_abs / 25.0));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(TorusKnotSpec(2, 4), std::domain_error);   // not coprime
    CHECK_THROWS_AS(TorusKnotSpec(0, 3), std::domain_error);
    CHECK_THROWS_AS(jones_torus(TorusKnotSpec(2, 3), 0, UnitRoot(1, 5)), std::domain_error);
    CHECK_NOTHROW(TorusKnotSpec(1, 5));  // unknot companion accepted at library level
}
