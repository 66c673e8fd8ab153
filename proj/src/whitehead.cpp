#include "cjones/whitehead.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace cjones {

namespace {

// Per-N tables shared by the Kashaev kernels.  With w_m = 4 sin^2(pi m/N)
// = (1-t^{-m})(1-t^m), the xi summand factors as
//   prod_{j=1}^{n} (1-t^{-i-j})(1-t^{i+j})/(1-t^j)  =  Q_{n,i} / C_n,
//   Q_{n,i} = prod_{m=i+1}^{i+n} w_m  (positive real),
//   C_n    = prod_{j=1}^{n} (1-t^j),
// so Q comes from one prefix-product array as a quotient of two entries.
struct KashaevTables {
    std::int64_t N;
    std::vector<ExtReal> wq;          // wq[k] = prod_{m=1}^{k} w_m
    std::vector<ExtComplex> c;        // c[n] = C_n
    std::vector<ExtComplex> c_recip;  // 1 / C_n

    explicit KashaevTables(const RootContext& ctx) : N(ctx.order()) {
        wq.resize(static_cast<std::size_t>(N));
        c.resize(static_cast<std::size_t>(N));
        c_recip.resize(static_cast<std::size_t>(N));
        wq[0] = ExtReal::from_double(1.0);
        c[0] = ExtComplex::from_double(1.0);
        c_recip[0] = c[0];
        const double pi_over_n = std::numbers::pi / static_cast<double>(N);
        for (std::int64_t m = 1; m < N; ++m) {
            double s = std::sin(pi_over_n * static_cast<double>(m));
            wq[m] = wq[m - 1] * ExtReal::from_double(4.0 * s * s);
            c[m] = ext_mul(c[m - 1],
                           ExtComplex::from_complex(1.0 - ctx.power(m)));
            c_recip[m] = c[m].reciprocal();
        }
    }

    ExtReal q(std::int64_t n, std::int64_t i) const {
        const ExtReal& a = wq[static_cast<std::size_t>(i + n)];
        const ExtReal& b = wq[static_cast<std::size_t>(i)];
        double m = a.m / b.m;  // in (0.5, 2)
        std::int64_t e = a.e - b.e;
        if (m < 1.0) { m *= 2.0; --e; }
        return {m, e};
    }
};

// Prefix sums for b_{n,i}: the three-term j-sum telescopes into
//   G[i+n] - G[i] - T[n],
//   g(m) = (N-m)/(1-t^{-(N-m)}) + m/(1-t^{-m}),   G[k] = sum_{m<=k} g(m),
//   T[n] = sum_{j<=n} j/(1-t^{-j}).
struct BTables {
    std::vector<std::complex<double>> G, T;

    explicit BTables(const RootContext& ctx) {
        const std::int64_t N = ctx.order();
        G.resize(static_cast<std::size_t>(N));
        T.resize(static_cast<std::size_t>(N));
        G[0] = T[0] = {0.0, 0.0};
        for (std::int64_t m = 1; m < N; ++m) {
            std::complex<double> gm =
                static_cast<double>(N - m) / (1.0 - ctx.power(-(N - m))) +
                static_cast<double>(m) / (1.0 - ctx.power(-m));
            G[m] = G[m - 1] + gm;
            T[m] = T[m - 1] + static_cast<double>(m) / (1.0 - ctx.power(-m));
        }
    }
};

ExtComplex wl_kernel(const RootContext& ctx, std::int64_t r, bool parallel) {
    const std::int64_t N = ctx.order();
    KashaevTables tab(ctx);
    std::vector<ExtComplex> part(static_cast<std::size_t>(N));

#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
    for (std::int64_t n = 0; n < N; ++n) {
        ExtReal inner;  // sum_i Q_{n,i}, all terms positive
        for (std::int64_t i = 0; i <= N - 1 - n; ++i) inner = inner + tab.q(n, i);
        ExtComplex v = ext_mul(tab.c_recip[static_cast<std::size_t>(n)],
                               ExtComplex::from_ext_real(inner));
        v = v * (static_cast<double>(2 * n + 1));
        part[static_cast<std::size_t>(n)] = v * ctx.power(r * n * (n + 1));
    }
    (void)parallel;

    ExtComplex total;
    for (std::int64_t n = 0; n < N; ++n) total = ext_add(total, part[static_cast<std::size_t>(n)]);
    return total * (-ctx.half_power(-1));  // global prefactor -t^{-1/2}
}

ExtComplex wd_kernel(const RootContext& ctx, const TorusKnotSpec& companion,
                     std::int64_t r, bool parallel) {
    const std::int64_t N = ctx.order();
    KashaevTables tab(ctx);
    BTables bt(ctx);
    std::vector<ExtComplex> part(static_cast<std::size_t>(N));

#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
    for (std::int64_t n = 0; n < N; ++n) {
        auto [hat, dhat] = torus_hat_pair(companion, 2 * n + 1, ctx);
        const double rn = static_cast<double>(r * n * (n + 1));
        ExtComplex inner;
        for (std::int64_t i = 0; i <= N - 1 - n; ++i) {
            std::complex<double> b =
                rn - static_cast<double>(N * (i + n)) +
                (bt.G[static_cast<std::size_t>(i + n)] - bt.G[static_cast<std::size_t>(i)] -
                 bt.T[static_cast<std::size_t>(n)]);
            ExtReal qv = tab.q(n, i);
            inner = ext_add(inner, ExtComplex::make(qv.m * (b * hat + dhat), qv.e));
        }
        ExtComplex v = ext_mul(tab.c_recip[static_cast<std::size_t>(n)], inner);
        part[static_cast<std::size_t>(n)] = v * ctx.power(r * n * (n + 1));
    }
    (void)parallel;

    ExtComplex total;
    for (std::int64_t n = 0; n < N; ++n) total = ext_add(total, part[static_cast<std::size_t>(n)]);
    // (-t^{-1/2})/(-N) = t^{-1/2}/N
    return total * ctx.half_power(-1) * (1.0 / static_cast<double>(N));
}

// Full xi_{N,n}(t) at generic t; O(nN) direct products, oracle use only.
ExtComplex xi_generic(const UnitRoot& t, std::int64_t N, std::int64_t n) {
    ExtComplex pref = ExtComplex::from_complex(t.pow(N * N - 1, 2) * t.pow(N * (N - 1) / 2));
    ExtComplex acc;
    for (std::int64_t i = 0; i <= N - 1 - n; ++i) {
        ExtComplex prod = ExtComplex::from_complex(t.pow(-N * (i + n)));
        for (std::int64_t j = 1; j <= n; ++j) {
            if (t.power_is_one(j))
                throw SingularEvaluation("xi: (1 - t^j) vanishes at this root");
            std::complex<double> num =
                (1.0 - t.pow(N - i - j)) * (1.0 - t.pow(i + j));
            prod = prod * (num / (1.0 - t.pow(j)));
        }
        acc = ext_add(acc, prod);
    }
    return ext_mul(pref, acc);
}

}  // namespace

ExtComplex xi_at_root(const RootContext& ctx, std::int64_t n) {
    const std::int64_t N = ctx.order();
    if (n < 0 || n >= N) throw std::domain_error("xi_at_root: need 0 <= n < N");
    KashaevTables tab(ctx);
    ExtReal inner;
    for (std::int64_t i = 0; i <= N - 1 - n; ++i) inner = inner + tab.q(n, i);
    // t^{-N(i+n)} = 1 at the root; prefactor evaluates to -t^{-1/2}.
    std::complex<double> pref =
        ctx.half_power(N * N - 1) * ctx.power(N * (N - 1) / 2);
    ExtComplex v = ext_mul(tab.c_recip[static_cast<std::size_t>(n)],
                           ExtComplex::from_ext_real(inner));
    return v * pref;
}

std::complex<double> b_coeff(const RootContext& ctx, std::int64_t n, std::int64_t i,
                             std::int64_t r) {
    const std::int64_t N = ctx.order();
    if (n < 0 || i < 0 || n + i >= N)
        throw std::domain_error("b_coeff: need 0 <= n, i and n+i < N");
    std::complex<double> b =
        static_cast<double>(r * n * (n + 1)) - static_cast<double>(N * (i + n));
    for (std::int64_t j = 1; j <= n; ++j) {
        b += static_cast<double>(N - i - j) / (1.0 - ctx.power(-(N - i - j)));
        b += static_cast<double>(i + j) / (1.0 - ctx.power(-(i + j)));
        b -= static_cast<double>(j) / (1.0 - ctx.power(-j));
    }
    return b;
}

JonesValue jones_wl_at_root(const RootContext& ctx, std::int64_t r) {
    return JonesValue::make(ctx.order(), wl_kernel(ctx, r, true));
}

JonesValue jones_wl_at_root_serial(const RootContext& ctx, std::int64_t r) {
    return JonesValue::make(ctx.order(), wl_kernel(ctx, r, false));
}

JonesValue jones_wd_at_root(const RootContext& ctx, const TorusKnotSpec& companion,
                            std::int64_t r) {
    return JonesValue::make(ctx.order(), wd_kernel(ctx, companion, r, true));
}

JonesValue jones_wd_at_root_serial(const RootContext& ctx, const TorusKnotSpec& companion,
                                   std::int64_t r) {
    return JonesValue::make(ctx.order(), wd_kernel(ctx, companion, r, false));
}

ExtComplex jones_wl_generic(std::int64_t M, std::int64_t j, std::int64_t r, std::int64_t N) {
    if (N < 1) throw std::domain_error("jones_wl_generic: N must be >= 1");
    UnitRoot t(j, M);
    if (t.power_is_one(N))
        throw SingularEvaluation("jones_wl_generic: t^{N/2} - t^{-N/2} vanishes; use jones_wl_at_root");
    std::complex<double> den = t.pow(N, 2) - t.pow(-N, 2);
    ExtComplex acc;
    for (std::int64_t n = 0; n < N; ++n) {
        // belt factor; the (t^{(2n+1)/2} - t^{-(2n+1)/2}) factors of the
        // gluing and belt terms cancel identically and are not evaluated.
        std::complex<double> belt =
            (t.pow(N * (2 * n + 1), 2) - t.pow(-N * (2 * n + 1), 2)) / den;
        ExtComplex term = xi_generic(t, N, n) * (belt * t.pow(r * n * (n + 1)));
        acc = ext_add(acc, term);
    }
    return acc;
}

ExtComplex jones_wd_generic(std::int64_t M, std::int64_t j, const TorusKnotSpec& companion,
                            std::int64_t r, std::int64_t N) {
    if (N < 1) throw std::domain_error("jones_wd_generic: N must be >= 1");
    UnitRoot t(j, M);
    if (t.power_is_one(N))
        throw SingularEvaluation("jones_wd_generic: t^{N/2} - t^{-N/2} vanishes; use jones_wd_at_root");
    std::complex<double> den = t.pow(N, 2) - t.pow(-N, 2);
    ExtComplex acc;
    for (std::int64_t n = 0; n < N; ++n) {
        ExtComplex hat = hat_jones_torus(companion, 2 * n + 1, t);
        ExtComplex term = ext_mul(xi_generic(t, N, n), hat);
        term = term * (t.pow(r * n * (n + 1)) / den);
        acc = ext_add(acc, term);
    }
    return acc;
}

JonesValue evaluate_kashaev(const KnotSpec& knot, std::int64_t N) {
    switch (knot.pattern.kind) {
        case PatternKind::TwistedWhiteheadLink:
            return jones_wl_at_root(RootContext(N), knot.pattern.r);
        case PatternKind::WhiteheadDouble:
            return jones_wd_at_root(RootContext(N), knot.torus, knot.pattern.r);
        case PatternKind::BareTorusKnot:
        default:
            return kashaev_torus(knot.torus, N);
    }
}

}  // namespace cjones
