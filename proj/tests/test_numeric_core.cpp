// Extended-range arithmetic, root-of-unity contexts, Lobachevsky function.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "cjones/ext_complex.hpp"
#include "cjones/lobachevsky.hpp"
#include "cjones/root_context.hpp"

using namespace cjones;
using cd = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;

// Arbitrary-precision reference values (mpmath, 25 digits):
constexpr double kLobPiOver4 = 0.4579827970886095075273;  // = Catalan/2
constexpr double kLob03 = 0.4547503982084090121052;
constexpr double kLob10 = 0.3635730254316396237149;
constexpr double kLob25 = -0.4964100662734783593546;
}  // namespace

TEST_CASE("ext_mul examples") {
    ExtComplex one{{1.0, 0.0}, 0};
    CHECK(ext_mul(one, one).man == cd{1.0, 0.0});
    CHECK(ext_mul(one, one).exp2 == 0);

    ExtComplex a{{1.5, 0.0}, 10};
    ExtComplex p = ext_mul(a, a);  // 2.25 * 2^20 = 1.125 * 2^21
    CHECK(p.man == cd{1.125, 0.0});
    CHECK(p.exp2 == 21);

    ExtComplex z;
    ExtComplex x = ExtComplex::from_complex({-0.7, 1.3});
    CHECK(ext_mul(x, z).is_zero());
    CHECK(ext_mul(z, x).is_zero());
}

TEST_CASE("ext_add examples") {
    ExtComplex one{{1.0, 0.0}, 0};
    ExtComplex x = ExtComplex::from_complex({3.0, -4.0});
    CHECK(ext_add(x, ExtComplex{}).man == x.man);

    ExtComplex s = ext_add(one, one);
    CHECK(s.man == cd{1.0, 0.0});
    CHECK(s.exp2 == 1);

    ExtComplex big{{1.0, 0.0}, 200};
    ExtComplex swamped = ext_add(big, one);
    CHECK(swamped.man == cd{1.0, 0.0});
    CHECK(swamped.exp2 == 200);
}

TEST_CASE("ext_log_abs") {
    CHECK(ext_log_abs(ExtComplex{{1.0, 0.0}, 0}) == 0.0);
    CHECK(ext_log_abs(ExtComplex{{1.0, 0.0}, 100}) ==
          doctest::Approx(100.0 * std::log(2.0)).epsilon(1e-14));
    // |value| = e
    ExtComplex e = ExtComplex::from_double(std::exp(1.0));
    CHECK(ext_log_abs(e) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(ext_log_abs(ExtComplex{}), std::domain_error);
}

TEST_CASE("round-trip through ExtComplex is exact in range") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> mag(-50.0, 50.0);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    for (int it = 0; it < 2000; ++it) {
        cd z = std::polar(std::exp(mag(rng)), ang(rng));
        ExtComplex x = ExtComplex::from_complex(z);
        CHECK(std::abs(x.man) >= 1.0);
        CHECK(std::abs(x.man) < 2.0);
        CHECK(x.to_complex() == z);  // power-of-two scaling is exact
    }
}

TEST_CASE("ext arithmetic agrees with complex<double> in range") {
    std::mt19937_64 rng(999);
    std::uniform_real_distribution<double> mag(-30.0, 30.0);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    for (int it = 0; it < 5000; ++it) {
        cd za = std::polar(std::exp(mag(rng)), ang(rng));
        cd zb = std::polar(std::exp(mag(rng)), ang(rng));
        ExtComplex a = ExtComplex::from_complex(za);
        ExtComplex b = ExtComplex::from_complex(zb);
        cd prod = ext_mul(a, b).to_complex();
        CHECK(std::abs(prod - za * zb) <= 1e-13 * std::abs(za * zb));
        cd sum = ext_add(a, b).to_complex();
        cd ref = za + zb;
        if (std::abs(ref) > 1e-10 * (std::abs(za) + std::abs(zb)))
            CHECK(std::abs(sum - ref) <= 1e-13 * std::abs(ref));
    }
}

TEST_CASE("ext_mul commutative bit-exactly, associative to 4 ulp") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mag(-200.0, 200.0);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    for (int it = 0; it < 2000; ++it) {
        ExtComplex a = ExtComplex::from_log_polar(mag(rng), ang(rng));
        ExtComplex b = ExtComplex::from_log_polar(mag(rng), ang(rng));
        ExtComplex c = ExtComplex::from_log_polar(mag(rng), ang(rng));
        ExtComplex ab = ext_mul(a, b), ba = ext_mul(b, a);
        CHECK(ab.man == ba.man);
        CHECK(ab.exp2 == ba.exp2);
        ExtComplex l = ext_mul(ext_mul(a, b), c);
        ExtComplex r = ext_mul(a, ext_mul(b, c));
        CHECK(l.exp2 == r.exp2);
        CHECK(std::abs(l.man - r.man) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                             std::abs(l.man));
    }
}

TEST_CASE("ExtReal basics") {
    ExtReal r = ExtReal::from_log(1000.0);
    CHECK(r.log() == doctest::Approx(1000.0).epsilon(1e-14));
    ExtReal s = r * r;
    CHECK(s.log() == doctest::Approx(2000.0).epsilon(1e-14));
    ExtReal t = s + s;
    CHECK(t.log() == doctest::Approx(2000.0 + std::log(2.0)).epsilon(1e-14));
    CHECK((ExtReal{} + r).log() == doctest::Approx(1000.0));
}

TEST_CASE("RootContext cache identities") {
    for (std::int64_t N : {1, 2, 7, 100, 1001}) {
        RootContext ctx(N);
        CHECK(ctx.power(N) == cd{1.0, 0.0});  // exact
        CHECK(ctx.power(0) == cd{1.0, 0.0});
        // t^j t^k vs t^{(j+k) mod N}
        std::mt19937_64 rng(42 + static_cast<unsigned long>(N));
        std::uniform_int_distribution<std::int64_t> pick(0, N - 1);
        for (int it = 0; it < 200; ++it) {
            std::int64_t j = pick(rng), k = pick(rng);
            cd prod = ctx.power(j) * ctx.power(k);
            cd direct = ctx.power(j + k);
            CHECK(std::abs(prod - direct) <= 4e-16 * (1.0 + std::abs(direct)));
        }
        if (N > 1) {
            cd geo{0.0, 0.0};
            for (std::int64_t j = 0; j < N; ++j) geo += ctx.power(j);
            CHECK(std::abs(geo) <= static_cast<double>(N) * 1e-12);
        }
    }
}

TEST_CASE("RootContext half and quarter powers follow the global convention") {
    RootContext ctx(5);
    UnitRoot t(1, 5);
    for (std::int64_t j = -20; j <= 20; ++j) {
        CHECK(std::abs(ctx.half_power(j) - t.pow(j, 2)) <= 1e-15);
        CHECK(std::abs(ctx.quarter_power(j) - t.pow(j, 4)) <= 1e-15);
    }
    // conjugate direction
    RootContext cc(5, -1);
    CHECK(std::abs(cc.power(1) - std::conj(ctx.power(1))) <= 1e-16);
}

TEST_CASE("lobachevsky values") {
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::abs(lobachevsky(kPi)) <= 1e-13);
    CHECK(std::abs(lobachevsky(kPi / 2)) <= 1e-13);  // L(pi/2) = 0
    CHECK(lobachevsky(kPi / 4) == doctest::Approx(kLobPiOver4).epsilon(1e-13));
    CHECK(8.0 * lobachevsky(kPi / 4) ==
          doctest::Approx(3.663862376708876060218).epsilon(1e-13));
    CHECK(lobachevsky(0.3) == doctest::Approx(kLob03).epsilon(1e-13));
    CHECK(lobachevsky(1.0) == doctest::Approx(kLob10).epsilon(1e-13));
    CHECK(lobachevsky(2.5) == doctest::Approx(kLob25).epsilon(1e-13));
    CHECK_THROWS_AS(lobachevsky(-0.1), std::domain_error);
    CHECK_THROWS_AS(lobachevsky(3.2), std::domain_error);
    CHECK_THROWS_AS(lobachevsky(1.0, -1e-9), std::domain_error);

    LobachevskyEvaluator ev{1e-12};
    CHECK(ev(kPi / 4) == doctest::Approx(kLobPiOver4).epsilon(1e-12));
}

TEST_CASE("lobachevsky reflection identity") {
    const double tol = 1e-12;
    for (int k = 0; k <= 1000; ++k) {
        double x = kPi * static_cast<double>(k) / 1000.0;
        CHECK(std::abs(lobachevsky(x, tol) + lobachevsky(kPi - x, tol)) <= 2.0 * tol);
    }
}
