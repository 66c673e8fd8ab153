#pragma once
/*
 * cyclotomic.hpp
 *
 * Exact arithmetic in Z[zeta_m], elements stored as integer coefficient
 * vectors in the power basis 1, zeta, ..., zeta^{phi(m)-1}, fully reduced
 * mod Phi_m.  Zero / nonzero of the A-sums is decided here with no
 * floating-point shortcut; float magnitudes are advisory output only.
 */

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "cjones/int_poly.hpp"

namespace cjones {

class CycloField {
public:
    explicit CycloField(std::int64_t m);

    std::int64_t conductor() const { return m_; }
    const IntPoly& phi() const { return phi_; }
    std::size_t degree() const { return deg_; }

    /// zeta^e reduced mod Phi_m (any sign of e), as a coefficient row.
    const std::vector<mpz_class>& zeta_row(std::int64_t e) const;

private:
    std::int64_t m_;
    IntPoly phi_;
    std::size_t deg_;
    std::vector<std::vector<mpz_class>> rows_;  // rows_[e] = zeta^e mod Phi, e in [0, m)
};

class CycloElem {
public:
    CycloElem() = default;
    CycloElem(const CycloField* field, std::vector<mpz_class> coeffs);

    static CycloElem zero(const CycloField& f);
    static CycloElem one(const CycloField& f);
    static CycloElem from_integer(const CycloField& f, const mpz_class& v);
    /// Reduces an arbitrary polynomial in zeta (exponents as given) into
    /// the canonical basis.
    static CycloElem from_poly(const CycloField& f, const IntPoly& p);

    const CycloField& field() const { return *field_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend bool operator==(const CycloElem& a, const CycloElem& b);

private:
    const CycloField* field_ = nullptr;
    std::vector<mpz_class> c_;  // size degree()
};

CycloElem cyclo_mul(const CycloElem& a, const CycloElem& b);

/// Canonical representative of zeta_m^{e mod m}.
CycloElem zeta_power(const CycloField& f, std::int64_t e);

/// Exact zero test in the canonical basis.
bool is_zero(const CycloElem& a);

/// Numerical embedding zeta |-> e^{2 pi i/m}.
std::complex<double> embed(const CycloElem& a);

/// Atilde = -4 A_{p,q}^{sign}(N,k) as an element of Z[zeta_{4pq}]:
///   sum_j (sign)^j j^{2k} zeta^{-N j^2} (zeta_{2p}^j - zeta_{2p}^{-j})
///                                       (zeta_{2q}^j - zeta_{2q}^{-j}),
/// with zeta_{2p} = zeta_{4pq}^{2q}, zeta_{2q} = zeta_{4pq}^{2p}.
/// The -4 = (2i)^2 rescaling clears the sine prefactors, so
/// Atilde = 0 iff A = 0.
CycloElem a_sum_exact(const CycloField& f, std::int64_t p, std::int64_t q,
                      std::int64_t N, int k, int sign);

/// The proof's rewriting of the same quantity (k = 1, + sign):
///   sum_{-pq<j<pq} j^2 zeta^{-N j^2 + 2qj} (zeta_{2q}^j - zeta_{2q}^{-j}).
/// Must equal a_sum_exact(f, p, q, N, 1, +1) exactly.
CycloElem a_sum_exact_proof_form(const CycloField& f, std::int64_t p, std::int64_t q,
                                 std::int64_t N);

struct NonvanishRow {
    std::int64_t N = 0;
    bool exact_zero = false;
    double float_abs = 0.0;  // |A| from the float path, advisory
};

struct NonvanishReport {
    std::int64_t p = 0, q = 0;
    int k = 1;
    std::vector<NonvanishRow> rows;  // N in [0, 4pq)
    std::int64_t zero_count = 0;
};

/// Full-period scan of Atilde^{+}(N,k); by periodicity this decides all N.
NonvanishReport nonvanish_scan(std::int64_t p, std::int64_t q, int k = 1);

struct ExactWl {
    std::shared_ptr<CycloField> field;  // Z[zeta_{4N}]
    CycloElem elem;
    std::int64_t unit_pow;  // J_{WL(r),N} = zeta_{4N}^{unit_pow} * elem
};

/// Exact J_{WL(r),N} at t = e^{2 pi i/N} for N <= 32 (coefficient growth
/// guard); the fixed fractional-power prefactor is carried as unit_pow.
ExactWl jones_wl_exact(std::int64_t N, std::int64_t r);

}  // namespace cjones
