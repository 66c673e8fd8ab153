#pragma once
/*
 * int_poly.hpp
 *
 * Dense univariate polynomials over arbitrary-precision integers,
 * lowest degree first, canonical (no trailing zero coefficients).
 * Schoolbook arithmetic; degrees stay in the hundreds here.
 */

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace cjones {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return constant(1); }
    static IntPoly constant(const mpz_class& v);
    /// x^k (k >= 0)
    static IntPoly monomial(std::size_t k, const mpz_class& coeff = 1);
    /// x^m - 1
    static IntPoly x_pow_minus_one(std::size_t m);

    bool is_zero() const { return c_.empty(); }
    /// degree of the zero polynomial is -1
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    mpz_class coeff_or_zero(std::size_t i) const {
        return i < c_.size() ? c_[i] : mpz_class(0);
    }
    const mpz_class& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    /// Exact quotient a / b; throws std::domain_error when the division
    /// leaves a remainder.
    static IntPoly div_exact(const IntPoly& a, const IntPoly& b);

    /// Remainder of division by a monic polynomial.
    static IntPoly mod_monic(const IntPoly& a, const IntPoly& modulus);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

/// m-th cyclotomic polynomial by exact recursive division:
/// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
IntPoly cyclotomic_poly(std::int64_t m);

}  // namespace cjones
