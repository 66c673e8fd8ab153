#pragma once
/*
 * torus.hpp
 *
 * Colored Jones polynomial of torus knots via Morton's sum
 *
 *   J_{T(p,q),n}(t) = t^{-pq(n^2-1)/4} / (t^{n/2}-t^{-n/2})
 *                     * sum_k t^{pk(qk+1)} (t^{qk+1/2} - t^{-qk-1/2}),
 *
 * k = -(n-1)/2, ..., (n-1)/2 in integer steps (half-integers for even n).
 * Writing k = kappa/2 every exponent becomes an integer number of quarter
 * units, resolved through the global fractional-power convention.
 */

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "cjones/ext_complex.hpp"
#include "cjones/jones_value.hpp"
#include "cjones/root_context.hpp"
#include "cjones/unit_root.hpp"

namespace cjones {

struct TorusKnotSpec {
    std::int64_t p = 2, q = 3;

    TorusKnotSpec() = default;
    TorusKnotSpec(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
        if (p < 1 || q < 1) throw std::domain_error("TorusKnotSpec: p, q must be >= 1");
        if (std::gcd(p, q) != 1) throw std::domain_error("TorusKnotSpec: p, q must be coprime");
    }
};

/// Thrown where a formula hits its 0/0 point and the caller must switch to
/// the hat/derivative path.
struct SingularEvaluation : std::domain_error {
    using std::domain_error::domain_error;
};

/// Jhat_{T(p,q),n}(t) = (t^{n/2}-t^{-n/2}) J_{T(p,q),n}(t), computed without
/// any division; finite everywhere.
ExtComplex hat_jones_torus(const TorusKnotSpec& spec, std::int64_t n, const UnitRoot& t);

/// t d/dt Jhat_{T(p,q),n} at t: every monomial t^e of the expanded Jhat is
/// multiplied by its rational exponent e.
ExtComplex hat_jones_torus_tderiv(const TorusKnotSpec& spec, std::int64_t n, const UnitRoot& t);

/// Morton's formula as written.  Throws SingularEvaluation when
/// t^{n/2} == t^{-n/2} (exact integer test).
ExtComplex jones_torus(const TorusKnotSpec& spec, std::int64_t n, const UnitRoot& t);

/// J_{T(p,q),n}(t) extended by L'Hospital across the singular points: the
/// prefactor is pulled out of Morton's numerator sum and the remaining sum
/// and the denominator are differentiated.
ExtComplex jones_torus_limit(const TorusKnotSpec& spec, std::int64_t n, const UnitRoot& t);

/// Kashaev invariant J_{T(p,q),N}(e^{2 pi i/N}).
JonesValue kashaev_torus(const TorusKnotSpec& spec, std::int64_t N);

/// (Jhat, t dJhat/dt) for color n at the context's root; the fast table path
/// used by the Whitehead-double kernels.
std::pair<std::complex<double>, std::complex<double>>
torus_hat_pair(const TorusKnotSpec& spec, std::int64_t n, const RootContext& ctx);

}  // namespace cjones
