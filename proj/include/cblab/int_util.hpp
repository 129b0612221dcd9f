#pragma once

#include <cstdint>

#include "cblab/error.hpp"

namespace cblab {

// Floor division for b > 0, correct for negative numerators. Integer-only;
// no floating point anywhere in the bound arithmetic.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    require(b > 0, ErrorKind::usage, "floor_div: divisor must be positive");
    std::int64_t q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    require(b > 0, ErrorKind::usage, "ceil_div: divisor must be positive");
    std::int64_t q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// binom(n, k) for desk-scale n; overflow is not a concern in the ranges the
// toolkit sweeps (checked by the caller's range caps).
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

inline std::int64_t ipow(std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace cblab
