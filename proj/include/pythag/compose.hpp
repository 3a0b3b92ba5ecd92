#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pythag/core.hpp"

namespace pythag {

// Sign choice for the second factor of a composition: plus multiplies the
// Gaussian bases, minus multiplies by the conjugate.
enum class Sign : int { plus = +1, minus = -1 };

// One entry per factor after the first in an n-ary composition.
using SignVector = std::vector<Sign>;

// Composition of two triples through their Gaussian bases. Writing
// z_i = b_i + i*a_i, Sign::plus returns the |parts| of z1 * z2 and
// Sign::minus the |parts| of z1 * conj(z2); the peak multiplies either way.
// The output is validated, never assumed: a prime shared between the peaks
// surfaces as errc::common_factor from the gcd check.
inline Triplet compose(const Triplet& t1, const Triplet& t2, Sign sign) {
    if (sign == Sign::minus && t1 == t2)
        throw error(errc::degenerate_result, "composing a triple with itself under minus");
    const Int cross1 = checked_mul(t1.a(), t2.b());
    const Int cross2 = checked_mul(t2.a(), t1.b());
    const Int legs = checked_mul(t1.a(), t2.a());
    const Int odds = checked_mul(t1.b(), t2.b());
    Int even_leg;
    Int odd_leg;
    if (sign == Sign::plus) {
        even_leg = checked_add(cross1, cross2);
        odd_leg = checked_abs(checked_sub(legs, odds));
    } else {
        even_leg = checked_abs(checked_sub(cross1, cross2));
        odd_leg = checked_add(legs, odds);
    }
    if (even_leg == 0 || odd_leg == 0)
        throw error(errc::degenerate_result, "composition produced a zero leg");
    return Triplet::validate(even_leg, odd_leg, checked_mul(t1.c(), t2.c()));
}

// The triple whose legs are |Re|, |Im| of (b + i*a)^n and whose peak is c^n.
// The real part stays odd and the imaginary part even for every n >= 1.
inline Triplet power(const Triplet& t, Int n) {
    if (n < 1) throw error(errc::invalid_argument, "exponent must be >= 1");
    Int re = t.b();
    Int im = t.a();
    for (Int k = 1; k < n; ++k) {
        const Int next_re = checked_sub(checked_mul(re, t.b()), checked_mul(im, t.a()));
        const Int next_im = checked_add(checked_mul(re, t.a()), checked_mul(im, t.b()));
        re = next_re;
        im = next_im;
    }
    const Int even_leg = checked_abs(im);
    const Int odd_leg = checked_abs(re);
    if (even_leg == 0 || odd_leg == 0)
        throw error(errc::degenerate_result, "power produced a zero leg");
    return Triplet::validate(even_leg, odd_leg, checked_pow(t.c(), n));
}

// Left fold of compose over the factors with one sign per factor after the
// first. Any association gives the same peak; fixing this one makes sign
// vectors canonical and outputs deterministic.
inline Triplet compose_many(const std::vector<Triplet>& factors, const SignVector& signs) {
    if (factors.empty()) throw error(errc::invalid_argument, "at least one factor required");
    if (signs.size() != factors.size() - 1)
        throw error(errc::invalid_argument, "need exactly one sign per factor after the first");
    Triplet acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = compose(acc, factors[i], signs[i - 1]);
    return acc;
}

}  // namespace pythag
