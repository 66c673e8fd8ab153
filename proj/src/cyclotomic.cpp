#include "cjones/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "cjones/leading.hpp"
#include "cjones/root_context.hpp"

namespace cjones {

CycloField::CycloField(std::int64_t m) : m_(m), phi_(cyclotomic_poly(m)) {
    deg_ = static_cast<std::size_t>(phi_.degree());
    // rows_[e] = zeta^e mod Phi, built by one shift-and-reduce per step
    rows_.resize(static_cast<std::size_t>(m_));
    rows_[0].assign(deg_, mpz_class(0));
    rows_[0][0] = 1;
    for (std::int64_t e = 1; e < m_; ++e) {
        const auto& prev = rows_[static_cast<std::size_t>(e - 1)];
        std::vector<mpz_class> cur(deg_, mpz_class(0));
        for (std::size_t i = 0; i + 1 < deg_; ++i) cur[i + 1] = prev[i];
        const mpz_class& lead = prev[deg_ - 1];
        if (lead != 0)  // x^deg = -(Phi - x^deg)
            for (std::size_t i = 0; i < deg_; ++i) cur[i] -= lead * phi_[i];
        rows_[static_cast<std::size_t>(e)] = std::move(cur);
    }
}

const std::vector<mpz_class>& CycloField::zeta_row(std::int64_t e) const {
    return rows_[static_cast<std::size_t>(umod(e, m_))];
}

CycloElem::CycloElem(const CycloField* field, std::vector<mpz_class> coeffs)
    : field_(field), c_(std::move(coeffs)) {
    if (c_.size() != field_->degree())
        throw std::domain_error("CycloElem: wrong coefficient count");
}

CycloElem CycloElem::zero(const CycloField& f) {
    return {&f, std::vector<mpz_class>(f.degree(), mpz_class(0))};
}

CycloElem CycloElem::one(const CycloField& f) { return from_integer(f, 1); }

CycloElem CycloElem::from_integer(const CycloField& f, const mpz_class& v) {
    std::vector<mpz_class> c(f.degree(), mpz_class(0));
    c[0] = v;
    return {&f, std::move(c)};
}

CycloElem CycloElem::from_poly(const CycloField& f, const IntPoly& p) {
    IntPoly rem = IntPoly::mod_monic(p, f.phi());
    std::vector<mpz_class> c(f.degree(), mpz_class(0));
    for (std::size_t i = 0; i < static_cast<std::size_t>(rem.degree() + 1); ++i)
        c[i] = rem[i];
    return {&f, std::move(c)};
}

namespace {
void check_same_field(const CycloElem& a, const CycloElem& b) {
    if (&a.field() != &b.field())
        throw std::domain_error("CycloElem: field mismatch");
}
}  // namespace

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    check_same_field(a, b);
    std::vector<mpz_class> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
    return {&a.field(), std::move(c)};
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) {
    check_same_field(a, b);
    std::vector<mpz_class> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
    return {&a.field(), std::move(c)};
}

bool operator==(const CycloElem& a, const CycloElem& b) {
    return &a.field() == &b.field() && a.coeffs() == b.coeffs();
}

CycloElem cyclo_mul(const CycloElem& a, const CycloElem& b) {
    check_same_field(a, b);
    const CycloField& f = a.field();
    IntPoly prod = IntPoly(std::vector<mpz_class>(a.coeffs())) *
                   IntPoly(std::vector<mpz_class>(b.coeffs()));
    return CycloElem::from_poly(f, prod);
}

CycloElem zeta_power(const CycloField& f, std::int64_t e) {
    return {&f, f.zeta_row(e)};
}

bool is_zero(const CycloElem& a) {
    for (const auto& v : a.coeffs())
        if (v != 0) return false;
    return true;
}

std::complex<double> embed(const CycloElem& a) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(a.field().conductor());
    std::complex<double> acc{0.0, 0.0};
    const auto& c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        double th = step * static_cast<double>(i);
        acc += c[i].get_d() * std::complex<double>{std::cos(th), std::sin(th)};
    }
    return acc;
}

namespace {

// Accumulates integer coefficients on powers of zeta (exponents mod m),
// then reduces once through the row table.
struct ExponentBuckets {
    const CycloField& f;
    std::vector<mpz_class> bucket;

    explicit ExponentBuckets(const CycloField& field)
        : f(field), bucket(static_cast<std::size_t>(field.conductor()), mpz_class(0)) {}

    void add(std::int64_t e, const mpz_class& v) {
        bucket[static_cast<std::size_t>(umod(e, f.conductor()))] += v;
    }

    CycloElem reduce() const {
        std::vector<mpz_class> c(f.degree(), mpz_class(0));
        for (std::size_t e = 0; e < bucket.size(); ++e) {
            if (bucket[e] == 0) continue;
            const auto& row = f.zeta_row(static_cast<std::int64_t>(e));
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += bucket[e] * row[i];
        }
        return {&f, std::move(c)};
    }
};

void check_a_args(const CycloField& f, std::int64_t p, std::int64_t q, int k) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw std::domain_error("a_sum_exact: p, q must be positive and coprime");
    if (f.conductor() != 4 * p * q)
        throw std::domain_error("a_sum_exact: field must be Z[zeta_{4pq}]");
    if (k != 0 && k != 1) throw std::domain_error("a_sum_exact: k must be 0 or 1");
}

}  // namespace

CycloElem a_sum_exact(const CycloField& f, std::int64_t p, std::int64_t q,
                      std::int64_t N, int k, int sign) {
    check_a_args(f, p, q, k);
    if (sign != 1 && sign != -1) throw std::domain_error("a_sum_exact: sign must be +-1");
    const std::int64_t m = 4 * p * q;
    ExponentBuckets acc(f);
    for (std::int64_t j = 1; j < p * q; ++j) {
        mpz_class coeff = (k == 1) ? mpz_class(j * j) : mpz_class(1);
        if (sign == -1 && (j & 1)) coeff = -coeff;
        std::int64_t gauss = umod(-N * j * j, m);
        // (zeta^{2qj} - zeta^{-2qj})(zeta^{2pj} - zeta^{-2pj})
        acc.add(gauss + 2 * q * j + 2 * p * j, coeff);
        acc.add(gauss + 2 * q * j - 2 * p * j, -coeff);
        acc.add(gauss - 2 * q * j + 2 * p * j, -coeff);
        acc.add(gauss - 2 * q * j - 2 * p * j, coeff);
    }
    return acc.reduce();
}

CycloElem a_sum_exact_proof_form(const CycloField& f, std::int64_t p, std::int64_t q,
                                 std::int64_t N) {
    check_a_args(f, p, q, 1);
    const std::int64_t m = 4 * p * q;
    ExponentBuckets acc(f);
    for (std::int64_t j = -(p * q - 1); j < p * q; ++j) {
        if (j == 0) continue;
        mpz_class coeff(j * j);
        std::int64_t base = umod(-N * j * j + 2 * q * j, m);
        acc.add(base + 2 * p * j, coeff);    // zeta_{2q}^{j} = zeta^{2pj}
        acc.add(base - 2 * p * j, -coeff);
    }
    return acc.reduce();
}

NonvanishReport nonvanish_scan(std::int64_t p, std::int64_t q, int k) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw std::domain_error("nonvanish_scan: p, q must be positive and coprime");
    CycloField f(4 * p * q);
    NonvanishReport rep;
    rep.p = p;
    rep.q = q;
    rep.k = k;
    for (std::int64_t N = 0; N < 4 * p * q; ++N) {
        CycloElem a = a_sum_exact(f, p, q, N, k, +1);
        NonvanishRow row;
        row.N = N;
        row.exact_zero = is_zero(a);
        row.float_abs = std::abs(a_sum_float(p, q, N, k, +1));
        if (row.exact_zero) ++rep.zero_count;
        rep.rows.push_back(row);
    }
    return rep;
}

ExactWl jones_wl_exact(std::int64_t N, std::int64_t r) {
    if (N < 1) throw std::domain_error("jones_wl_exact: N must be >= 1");
    if (N > 32)
        throw std::domain_error("jones_wl_exact: N > 32 exceeds the coefficient growth guard");

    // Work symbolically in Z[t, t^{-1}]:
    //   J = -t^{-1/2} sum_n (2n+1) t^{rn(n+1)} sum_i P_{n,i},
    //   P_{n,i} = (-1)^n t^{-ni - n(n+1)/2} (prod_{j=1}^n (1-t^{i+j})) * B_{n,i},
    // with B_{n,i} = Gaussian binomial [n+i choose n]_t built over i by
    // exact division.  A Laurent value is (poly, offset): poly * t^{offset}.
    struct Laurent {
        IntPoly poly;
        std::int64_t off = 0;  // value = poly * t^off
    };
    auto add_into = [](Laurent& acc, const IntPoly& p, std::int64_t off) {
        if (p.is_zero()) return;
        if (acc.poly.is_zero()) {
            acc.poly = p;
            acc.off = off;
            return;
        }
        std::int64_t lo = std::min(acc.off, off);
        IntPoly a = IntPoly::monomial(static_cast<std::size_t>(acc.off - lo)) * acc.poly;
        IntPoly b = IntPoly::monomial(static_cast<std::size_t>(off - lo)) * p;
        acc.poly = a + b;
        acc.off = lo;
    };

    Laurent total;
    for (std::int64_t n = 0; n < N; ++n) {
        IntPoly binom = IntPoly::one();     // [n+i choose n]_t at i = 0
        IntPoly numprod = IntPoly::one();   // prod_{j=1}^n (1 - t^{i+j}) at i = 0
        for (std::int64_t j = 1; j <= n; ++j)
            numprod = numprod * (IntPoly::one() - IntPoly::monomial(static_cast<std::size_t>(j)));

        Laurent inner;
        for (std::int64_t i = 0; i <= N - 1 - n; ++i) {
            if (i > 0) {
                // B_{n,i} = B_{n,i-1} (1-t^{n+i}) / (1-t^{i})
                binom = IntPoly::div_exact(
                    binom * (IntPoly::one() - IntPoly::monomial(static_cast<std::size_t>(n + i))),
                    IntPoly::one() - IntPoly::monomial(static_cast<std::size_t>(i)));
                numprod = IntPoly::div_exact(
                    numprod * (IntPoly::one() - IntPoly::monomial(static_cast<std::size_t>(n + i))),
                    IntPoly::one() - IntPoly::monomial(static_cast<std::size_t>(i)));
            }
            IntPoly term = numprod * binom;
            if (n & 1) term = IntPoly::zero() - term;  // (-1)^n
            add_into(inner, term, -n * i - n * (n + 1) / 2);
        }
        IntPoly weighted = inner.poly * IntPoly::constant(2 * n + 1);
        add_into(total, weighted, inner.off + r * n * (n + 1));
    }

    // Map t = zeta_{4N}^4 and carry the -t^{-1/2} = -zeta^{-2} prefactor as
    // the unit: J = zeta^{unit_pow} * elem with elem = -(total at zeta^4).
    auto field = std::make_shared<CycloField>(4 * N);
    ExponentBuckets acc(*field);
    const auto& c = total.poly.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        acc.add(4 * (total.off + static_cast<std::int64_t>(i)), -c[i]);
    }
    ExactWl out{field, acc.reduce(), umod(-2, 4 * N)};
    return out;
}

}  // namespace cjones
