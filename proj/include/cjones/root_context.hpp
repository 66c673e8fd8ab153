#pragma once
/*
 * root_context.hpp
 *
 * Evaluation context at t = e^{+-2 pi i/N}.  Caches t^{j/4} for one full
 * period so the O(N^2) summation loops never call sin/cos.  Powers are
 * built from angles (exponent reduced mod 4N, then one sin/cos each), not
 * by repeated multiplication, so there is no error accumulation and
 * t^N == 1 holds exactly in the cache.
 */

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "cjones/unit_root.hpp"

namespace cjones {

inline std::int64_t umod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

class RootContext {
public:
    /// direction +1: t = e^{2 pi i/N};  -1: the conjugate root.
    explicit RootContext(std::int64_t order, int direction = +1)
        : order_(order), dir_(direction >= 0 ? +1 : -1) {
        if (order_ < 1) throw std::domain_error("RootContext: order must be >= 1");
        quarter_.resize(static_cast<std::size_t>(4 * order_));
        const double step = dir_ * std::numbers::pi / (2.0 * static_cast<double>(order_));
        for (std::int64_t j = 0; j < 4 * order_; ++j) {
            double th = step * static_cast<double>(j);
            quarter_[static_cast<std::size_t>(j)] = {std::cos(th), std::sin(th)};
        }
        quarter_[0] = {1.0, 0.0};
    }

    std::int64_t order() const { return order_; }
    int direction() const { return dir_; }

    /// t^j
    std::complex<double> power(std::int64_t j) const {
        return quarter_[static_cast<std::size_t>(4 * umod(j, order_))];
    }
    /// t^{j/2}
    std::complex<double> half_power(std::int64_t j) const {
        return quarter_[static_cast<std::size_t>(2 * umod(j, 2 * order_))];
    }
    /// t^{j/4}
    std::complex<double> quarter_power(std::int64_t j) const {
        return quarter_[static_cast<std::size_t>(umod(j, 4 * order_))];
    }

    UnitRoot unit_root() const { return {dir_, order_}; }

private:
    std::int64_t order_;
    int dir_;
    std::vector<std::complex<double>> quarter_;
};

}  // namespace cjones
