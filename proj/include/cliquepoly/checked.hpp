#pragma once

#include <cstdint>

#include "cliquepoly/errors.hpp"

namespace cliquepoly::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) is always divisible by i.
        __int128 wide = static_cast<__int128>(r) * (n - k + i) / i;
        if (wide > INT64_MAX) throw OverflowError("binomial coefficient exceeds 64 bits");
        r = static_cast<std::int64_t>(wide);
    }
    return r;
}

} // namespace cliquepoly::checked
