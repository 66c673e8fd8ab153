#pragma once
/*
 * ext_complex.hpp
 *
 * Extended-exponent scalars.  A value is mantissa * 2^exponent with the
 * mantissa kept in [1,2) (or exactly zero), so products of ~10^5 factors
 * of magnitude e^{+-1e5} never overflow.  The mantissa itself is an
 * ordinary double / complex<double>; the exponent is a 64-bit integer.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace cjones {

namespace detail {
// Exponent gap beyond which the smaller addend cannot affect the sum.
inline constexpr std::int64_t kSwampGap = 512;
inline constexpr double kLn2 = 0.6931471805599453094172321214581766;
}  // namespace detail

/// Nonnegative real magnitude m * 2^e with m in [1,2) or m == 0.
struct ExtReal {
    double m = 0.0;
    std::int64_t e = 0;

    static ExtReal from_double(double v) {
        if (v == 0.0) return {};
        if (v < 0.0) throw std::domain_error("ExtReal: negative value");
        int k;
        double f = std::frexp(v, &k);  // v = f*2^k, f in [0.5,1)
        return {2.0 * f, static_cast<std::int64_t>(k) - 1};
    }

    /// e^{ln_v} as an ExtReal; accepts any finite ln_v.
    static ExtReal from_log(double ln_v) {
        double k = std::floor(ln_v / detail::kLn2);
        double frac = ln_v - k * detail::kLn2;
        ExtReal r{std::exp(frac), static_cast<std::int64_t>(k)};
        if (r.m >= 2.0) { r.m *= 0.5; ++r.e; }
        return r;
    }

    bool is_zero() const { return m == 0.0; }

    double log() const {
        if (m == 0.0) throw std::domain_error("ExtReal: log of zero");
        return std::log(m) + static_cast<double>(e) * detail::kLn2;
    }

    /// Value as a plain double; may overflow to inf / underflow to 0.
    double to_double() const {
        if (e > 2000) return HUGE_VAL;
        if (e < -2000) return 0.0;
        return std::ldexp(m, static_cast<int>(e));
    }

    friend ExtReal operator*(ExtReal a, ExtReal b) {
        if (a.m == 0.0 || b.m == 0.0) return {};
        double p = a.m * b.m;  // in [1,4)
        std::int64_t ee = a.e + b.e;
        if (p >= 2.0) { p *= 0.5; ++ee; }
        return {p, ee};
    }

    friend ExtReal operator+(ExtReal a, ExtReal b) {
        if (a.m == 0.0) return b;
        if (b.m == 0.0) return a;
        if (a.e < b.e) std::swap(a, b);
        std::int64_t d = a.e - b.e;
        if (d > detail::kSwampGap) return a;
        double s = a.m + std::ldexp(b.m, -static_cast<int>(d));  // in [1,4)
        if (s >= 2.0) { s *= 0.5; ++a.e; }
        return {s, a.e};
    }
};

/// Complex value man * 2^exp2 with |man| in [1,2) or man == 0 (exp2 == 0).
struct ExtComplex {
    std::complex<double> man{0.0, 0.0};
    std::int64_t exp2 = 0;

    ExtComplex() = default;
    ExtComplex(std::complex<double> m, std::int64_t e) : man(m), exp2(e) {}

    static ExtComplex from_complex(std::complex<double> z) {
        return make(z, 0);
    }
    static ExtComplex from_double(double x) { return make({x, 0.0}, 0); }

    /// Normalizes z * 2^e.  Scaling by powers of two is exact.
    static ExtComplex make(std::complex<double> z, std::int64_t e) {
        double a = std::abs(z);
        if (a == 0.0) return {};
        int k;
        std::frexp(a, &k);  // a in [2^{k-1}, 2^k)
        int shift = k - 1;
        return {{std::ldexp(z.real(), -shift), std::ldexp(z.imag(), -shift)},
                e + shift};
    }

    /// r * e^{i theta} with log r given; never overflows.
    static ExtComplex from_log_polar(double ln_r, double theta) {
        ExtReal r = ExtReal::from_log(ln_r);
        return {{r.m * std::cos(theta), r.m * std::sin(theta)}, r.e};
    }

    static ExtComplex from_ext_real(ExtReal r) { return {{r.m, 0.0}, r.e}; }

    bool is_zero() const { return man == std::complex<double>(0.0, 0.0); }

    double arg() const { return std::arg(man); }

    /// Value as complex<double>; overflows to inf for huge exponents.
    std::complex<double> to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        if (exp2 > 2000) {
            double s = HUGE_VAL;
            return {man.real() * s, man.imag() * s};
        }
        if (exp2 < -2000) return {0.0, 0.0};
        int k = static_cast<int>(exp2);
        return {std::ldexp(man.real(), k), std::ldexp(man.imag(), k)};
    }

    ExtComplex reciprocal() const {
        if (is_zero()) throw std::domain_error("ExtComplex: reciprocal of zero");
        return make(1.0 / man, -exp2);
    }

    ExtComplex conj() const { return {std::conj(man), exp2}; }

    friend ExtComplex operator-(const ExtComplex& a) { return {-a.man, a.exp2}; }
};

inline ExtComplex ext_mul(const ExtComplex& a, const ExtComplex& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::complex<double> p = a.man * b.man;  // |p| in [1,4)
    std::int64_t e = a.exp2 + b.exp2;
    double ap = std::abs(p);
    if (ap >= 2.0) {
        return {{0.5 * p.real(), 0.5 * p.imag()}, e + 1};
    }
    if (ap < 1.0) return ExtComplex::make(p, e);  // rounding can nudge below 1
    return {p, e};
}

inline ExtComplex ext_add(const ExtComplex& a, const ExtComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ExtComplex& hi = (a.exp2 >= b.exp2) ? a : b;
    const ExtComplex& lo = (a.exp2 >= b.exp2) ? b : a;
    std::int64_t d = hi.exp2 - lo.exp2;
    if (d > detail::kSwampGap) return hi;
    int k = -static_cast<int>(d);
    std::complex<double> s = hi.man + std::complex<double>(
        std::ldexp(lo.man.real(), k), std::ldexp(lo.man.imag(), k));
    return ExtComplex::make(s, hi.exp2);
}

inline double ext_log_abs(const ExtComplex& a) {
    if (a.is_zero()) throw std::domain_error("ext_log_abs: zero value");
    return std::log(std::abs(a.man)) + static_cast<double>(a.exp2) * detail::kLn2;
}

inline ExtComplex operator*(const ExtComplex& a, const ExtComplex& b) { return ext_mul(a, b); }
inline ExtComplex operator+(const ExtComplex& a, const ExtComplex& b) { return ext_add(a, b); }
inline ExtComplex operator*(const ExtComplex& a, std::complex<double> z) {
    return ext_mul(a, ExtComplex::from_complex(z));
}
inline ExtComplex operator*(const ExtComplex& a, double x) {
    return ext_mul(a, ExtComplex::from_double(x));
}
inline ExtComplex operator*(const ExtComplex& a, const ExtReal& r) {
    return ext_mul(a, ExtComplex::from_ext_real(r));
}

}  // namespace cjones
