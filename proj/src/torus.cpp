#include "cjones/torus.hpp"

namespace cjones {

namespace {

// Quarter-unit exponents of the two monomials of summand kappa (= 2k):
//   E+- = -pq(n^2-1) + p kappa (q kappa + 2) +- (2 q kappa + 2).
struct QuarterExp {
    std::int64_t plus, minus;
};

inline QuarterExp summand_exponents(const TorusKnotSpec& s, std::int64_t n,
                                    std::int64_t kappa) {
    std::int64_t base = -s.p * s.q * (n * n - 1) + s.p * kappa * (s.q * kappa + 2);
    std::int64_t osc = 2 * s.q * kappa + 2;
    return {base + osc, base - osc};
}

template <class Powers>
std::complex<double> hat_sum(const TorusKnotSpec& s, std::int64_t n, const Powers& qpow) {
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t kappa = -(n - 1); kappa <= n - 1; kappa += 2) {
        QuarterExp e = summand_exponents(s, n, kappa);
        acc += qpow(e.plus) - qpow(e.minus);
    }
    return acc;
}

template <class Powers>
std::complex<double> hat_tderiv_sum(const TorusKnotSpec& s, std::int64_t n,
                                    const Powers& qpow) {
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t kappa = -(n - 1); kappa <= n - 1; kappa += 2) {
        QuarterExp e = summand_exponents(s, n, kappa);
        acc += 0.25 * static_cast<double>(e.plus) * qpow(e.plus) -
               0.25 * static_cast<double>(e.minus) * qpow(e.minus);
    }
    return acc;
}

// t W'(t) where W is Morton's numerator sum without the t^{-pq(n^2-1)/4}
// prefactor; used by the cancelled-denominator limit.
std::complex<double> numerator_tderiv_sum(const TorusKnotSpec& s, std::int64_t n,
                                          const UnitRoot& t) {
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t kappa = -(n - 1); kappa <= n - 1; kappa += 2) {
        std::int64_t base = s.p * kappa * (s.q * kappa + 2);
        std::int64_t osc = 2 * s.q * kappa + 2;
        std::int64_t ep = base + osc, em = base - osc;
        acc += 0.25 * static_cast<double>(ep) * t.pow(ep, 4) -
               0.25 * static_cast<double>(em) * t.pow(em, 4);
    }
    return acc;
}

void check_color(std::int64_t n) {
    if (n < 1) throw std::domain_error("torus: color n must be >= 1");
}

}  // namespace

ExtComplex hat_jones_torus(const TorusKnotSpec& spec, std::int64_t n, const UnitRoot& t) {
    check_color(n);
    auto qpow = [&](std::int64_t e) { return t.pow(e, 4); };
    return ExtComplex::from_complex(hat_sum(spec, n, qpow));
}

ExtComplex hat_jones_torus_tderiv(const TorusKnotSpec& spec, std::int64_t n,
                                  const UnitRoot& t) {
    check_color(n);
    auto qpow = [&](std::int64_t e) { return t.pow(e, 4); };
    return ExtComplex::from_complex(hat_tderiv_sum(spec, n, qpow));
}

ExtComplex jones_torus(const TorusKnotSpec& spec, std::int64_t n, const UnitRoot& t) {
    check_color(n);
    if (t.power_is_one(n))
        throw SingularEvaluation("jones_torus: t^{n/2} - t^{-n/2} vanishes; use the hat/derivative path");
    auto qpow = [&](std::int64_t e) { return t.pow(e, 4); };
    std::complex<double> den = t.pow(n, 2) - t.pow(-n, 2);
    return ExtComplex::from_complex(hat_sum(spec, n, qpow) / den);
}

ExtComplex jones_torus_limit(const TorusKnotSpec& spec, std::int64_t n, const UnitRoot& t) {
    check_color(n);
    if (!t.power_is_one(n)) return jones_torus(spec, n, t);
    // 0/0 point: J = pref * tW'(t) / (t d/dt (t^{n/2}-t^{-n/2}))
    //          = pref * tW'(t) / (n * sign), sign = t^{n/2} = +-1 exactly.
    int sign = t.half_power_sign(n);
    std::complex<double> pref = t.pow(-spec.p * spec.q * (n * n - 1), 4);
    std::complex<double> dnum = numerator_tderiv_sum(spec, n, t);
    return ExtComplex::from_complex(pref * dnum /
                                    (static_cast<double>(n) * static_cast<double>(sign)));
}

JonesValue kashaev_torus(const TorusKnotSpec& spec, std::int64_t N) {
    if (N < 1) throw std::domain_error("kashaev_torus: N must be >= 1");
    return JonesValue::make(N, jones_torus_limit(spec, N, UnitRoot(1, N)));
}

std::pair<std::complex<double>, std::complex<double>>
torus_hat_pair(const TorusKnotSpec& spec, std::int64_t n, const RootContext& ctx) {
    check_color(n);
    std::complex<double> hat{0.0, 0.0}, dhat{0.0, 0.0};
    for (std::int64_t kappa = -(n - 1); kappa <= n - 1; kappa += 2) {
        QuarterExp e = summand_exponents(spec, n, kappa);
        std::complex<double> zp = ctx.quarter_power(e.plus);
        std::complex<double> zm = ctx.quarter_power(e.minus);
        hat += zp - zm;
        dhat += 0.25 * static_cast<double>(e.plus) * zp -
                0.25 * static_cast<double>(e.minus) * zm;
    }
    return {hat, dhat};
}

}  // namespace cjones
