#include "cjones/int_poly.hpp"

#include <map>
#include <stdexcept>

namespace cjones {

IntPoly IntPoly::constant(const mpz_class& v) {
    if (v == 0) return {};
    return IntPoly(std::vector<mpz_class>{v});
}

IntPoly IntPoly::monomial(std::size_t k, const mpz_class& coeff) {
    if (coeff == 0) return {};
    std::vector<mpz_class> c(k + 1, mpz_class(0));
    c[k] = coeff;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t m) {
    std::vector<mpz_class> c(m + 1, mpz_class(0));
    c[0] = -1;
    c[m] = 1;
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("IntPoly: division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree())
        throw std::domain_error("IntPoly: division is not exact");
    std::vector<mpz_class> rem = a.c_;
    std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                                mpz_class(0));
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = quot.size(); k-- > 0;) {
        mpz_class& lead = rem[k + db];
        if (lead == 0) continue;
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(),
                    b.leading().get_mpz_t());
        if (r != 0) throw std::domain_error("IntPoly: division is not exact");
        quot[k] = q;
        for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= q * b.c_[i];
    }
    for (const auto& v : rem)
        if (v != 0) throw std::domain_error("IntPoly: division is not exact");
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::mod_monic(const IntPoly& a, const IntPoly& modulus) {
    if (!modulus.is_monic())
        throw std::domain_error("IntPoly: modulus must be monic");
    std::vector<mpz_class> rem = a.c_;
    const auto dm = static_cast<std::size_t>(modulus.degree());
    while (rem.size() > dm) {
        mpz_class lead = rem.back();
        std::size_t k = rem.size() - 1 - dm;
        if (lead != 0)
            for (std::size_t i = 0; i <= dm; ++i) rem[k + i] -= lead * modulus.c_[i];
        rem.pop_back();
    }
    return IntPoly(std::move(rem));
}

IntPoly cyclotomic_poly(std::int64_t m) {
    if (m < 1) throw std::domain_error("cyclotomic_poly: m must be >= 1");
    static const auto compute = [](std::int64_t mm, auto& self,
                                   std::map<std::int64_t, IntPoly>& memo) -> const IntPoly& {
        auto it = memo.find(mm);
        if (it != memo.end()) return it->second;
        IntPoly num = IntPoly::x_pow_minus_one(static_cast<std::size_t>(mm));
        for (std::int64_t d = 1; d < mm; ++d)
            if (mm % d == 0) num = IntPoly::div_exact(num, self(d, self, memo));
        return memo.emplace(mm, std::move(num)).first->second;
    };
    std::map<std::int64_t, IntPoly> memo;
    return compute(m, compute, memo);
}

}  // namespace cjones
