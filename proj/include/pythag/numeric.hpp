#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "pythag/errors.hpp"

namespace pythag {

// All quantities are exact 64-bit integers. Arithmetic that could leave the
// representable range reports errc::overflow instead of wrapping; nothing in
// this library is allowed to wrap silently.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw error(errc::overflow, "addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw error(errc::overflow, "subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw error(errc::overflow, "multiplication");
    return r;
}

inline Int checked_abs(Int a) {
    if (a == std::numeric_limits<Int>::min()) throw error(errc::overflow, "absolute value");
    return a < 0 ? -a : a;
}

inline Int checked_pow(Int base, Int exp) {
    Int r = 1;
    for (Int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// floor(sqrt(n)), exact over the whole Int range.
inline Int isqrt(Int n) {
    if (n < 0) throw error(errc::invalid_argument, "isqrt of a negative number");
    const auto un = static_cast<std::uint64_t>(n);
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > un) --r;
    while ((r + 1) * (r + 1) <= un) ++r;
    return static_cast<Int>(r);
}

inline bool is_perfect_square(Int n) {
    if (n < 0) return false;
    const Int r = isqrt(n);
    return r * r == n;
}

// Trial division; adequate for the desk-scale ranges this library targets.
inline bool is_prime(Int n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (Int d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

}  // namespace pythag
