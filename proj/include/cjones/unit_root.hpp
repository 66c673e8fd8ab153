#pragma once
/*
 * unit_root.hpp
 *
 * A point t = e^{2 pi i num/den} on the unit circle with an exact rational
 * angle.  Every fractional power follows the one global convention
 *     t^{x} := e^{2 pi i (num/den) x},
 * so t^{1/2}, t^{(2n+1)/2}, t^{-pq(n^2-1)/4}, ... are all unambiguous and
 * mutually consistent.  Exponent reduction is done in exact integer
 * arithmetic before any trigonometry.
 */

#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cjones {

class UnitRoot {
public:
    UnitRoot(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ <= 0) throw std::domain_error("UnitRoot: denominator must be positive");
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        num_ %= den_;
        if (num_ < 0) num_ += den_;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// t^{e_num/e_den}.  Exact rational reduction mod 1 in 128-bit integers.
    std::complex<double> pow(std::int64_t e_num, std::int64_t e_den = 1) const {
        if (e_den == 0) throw std::domain_error("UnitRoot: zero exponent denominator");
        __int128 n = static_cast<__int128>(num_) * e_num;
        __int128 d = static_cast<__int128>(den_) * e_den;
        if (d < 0) { d = -d; n = -n; }
        n %= d;
        if (n < 0) n += d;
        double frac = static_cast<double>(n) / static_cast<double>(d);
        double th = 2.0 * std::numbers::pi * frac;
        return {std::cos(th), std::sin(th)};
    }

    std::complex<double> value() const { return pow(1); }

    /// Exact test for t^{e_num/e_den} == 1.
    bool pow_is_one(std::int64_t e_num, std::int64_t e_den = 1) const {
        __int128 n = static_cast<__int128>(num_) * e_num;
        __int128 d = static_cast<__int128>(den_) * e_den;
        return d != 0 && n % d == 0;
    }

    /// Exact test for t^{n} == 1 (integer exponent).
    bool power_is_one(std::int64_t n) const { return pow_is_one(n, 1); }

    /// For t^{n/2} real (i.e. t^n == 1): returns t^{n/2} = +1 or -1 exactly.
    int half_power_sign(std::int64_t n) const {
        __int128 nn = static_cast<__int128>(num_) * n;
        if (nn % den_ != 0) throw std::domain_error("UnitRoot: t^{n/2} is not real here");
        std::int64_t k = static_cast<std::int64_t>(nn / den_);
        return (k % 2 == 0) ? 1 : -1;
    }

private:
    std::int64_t num_, den_;
};

}  // namespace cjones
