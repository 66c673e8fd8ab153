#pragma once
/*
 * jones_value.hpp
 *
 * Result record for a colored Jones evaluation at a root of unity.
 */

#include <cstdint>
#include <numbers>

#include "cjones/ext_complex.hpp"

namespace cjones {

struct JonesValue {
    std::int64_t N = 0;
    ExtComplex value;
    double log_abs = 0.0;            // log|value|
    double two_pi_log_over_N = 0.0;  // 2 pi log|value| / N

    static JonesValue make(std::int64_t N, const ExtComplex& v) {
        JonesValue jv;
        jv.N = N;
        jv.value = v;
        jv.log_abs = ext_log_abs(v);
        jv.two_pi_log_over_N =
            2.0 * std::numbers::pi * jv.log_abs / static_cast<double>(N);
        return jv;
    }
};

}  // namespace cjones
