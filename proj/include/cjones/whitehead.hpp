#pragma once
/*
 * whitehead.hpp
 *
 * Colored Jones polynomials of the twisted Whitehead link WL(r) and of
 * Whitehead doubles WD(T(p,q), r), both at the Kashaev point t = e^{2 pi i/N}
 * (L'Hospital form) and at generic roots of unity (raw tangle-product form,
 * kept as an independent consistency oracle).
 *
 * The O(N^2) Kashaev kernels exist in two flavors sharing one code path:
 * an OpenMP-parallel version (over the outer color index n) and a serial
 * reference.  Both produce bit-identical results: each n yields one partial
 * term and the final reduction is always serial in index order.
 */

#include <complex>
#include <cstdint>

#include "cjones/ext_complex.hpp"
#include "cjones/jones_value.hpp"
#include "cjones/root_context.hpp"
#include "cjones/torus.hpp"

namespace cjones {

enum class PatternKind { BareTorusKnot, TwistedWhiteheadLink, WhiteheadDouble };

struct PatternSpec {
    PatternKind kind = PatternKind::BareTorusKnot;
    std::int64_t r = 0;  // twist count, any sign; ignored for BareTorusKnot
};

struct KnotSpec {
    TorusKnotSpec torus;  // companion; ignored for TwistedWhiteheadLink
    PatternSpec pattern;
};

/// Clasp-tangle eigenvalue xi_{N,n} at t = e^{+-2 pi i/N}.  O(N) per call.
ExtComplex xi_at_root(const RootContext& ctx, std::int64_t n);

/// b_{n,i} of the Whitehead-double L'Hospital form,
///   b_{n,i} = rn(n+1) - N(i+n)
///           + sum_{j=1}^{n} [ (N-i-j)/(1-t^{-(N-i-j)})
///                           + (i+j)/(1-t^{-(i+j)}) - j/(1-t^{-j}) ].
/// The j-sum sign is fixed by t d/dt log of the xi summand; see the tests
/// pinning b against the generic-formula limit.
std::complex<double> b_coeff(const RootContext& ctx, std::int64_t n, std::int64_t i,
                             std::int64_t r);

/// J_{WL(r),N} at the context's root.  OpenMP-parallel over n.
JonesValue jones_wl_at_root(const RootContext& ctx, std::int64_t r);
/// Serial reference; bit-identical to jones_wl_at_root.
JonesValue jones_wl_at_root_serial(const RootContext& ctx, std::int64_t r);

/// J_{WD(T(p,q),r),N} at the context's root (companion colors 2n+1 are
/// evaluated at the N-th root, not at their own Kashaev points).
JonesValue jones_wd_at_root(const RootContext& ctx, const TorusKnotSpec& companion,
                            std::int64_t r);
JonesValue jones_wd_at_root_serial(const RootContext& ctx, const TorusKnotSpec& companion,
                                   std::int64_t r);

/// Raw product-of-tangles formula at t = e^{2 pi i j/M}.  Throws
/// SingularEvaluation when t^{N/2} - t^{-N/2} = 0 (exact test).
ExtComplex jones_wl_generic(std::int64_t M, std::int64_t j, std::int64_t r, std::int64_t N);
ExtComplex jones_wd_generic(std::int64_t M, std::int64_t j, const TorusKnotSpec& companion,
                            std::int64_t r, std::int64_t N);

/// Kashaev-point evaluation of any supported knot.
JonesValue evaluate_kashaev(const KnotSpec& knot, std::int64_t N);

}  // namespace cjones
