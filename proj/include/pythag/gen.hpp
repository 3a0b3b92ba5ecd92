#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "pythag/core.hpp"

namespace pythag {

// Generator pair for the 2pq parameterization: p even, q odd, coprime.
// Every primitive triple is (2pq, |p^2 - q^2|, p^2 + q^2) for exactly one
// such unordered pair; a shared factor r would put r^2 into all three slots.
class PqPair {
public:
    static PqPair make(Int p, Int q) {
        if (p <= 0 || q <= 0)
            throw error(errc::invalid_argument, "p and q must be positive");
        if (p % 2 != 0 || q % 2 != 1)
            throw error(errc::parity_violation, "p must be even and q odd");
        if (std::gcd(p, q) != 1)
            throw error(errc::not_coprime,
                        "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") > 1");
        return PqPair(p, q);
    }

    Int p() const noexcept { return p_; }
    Int q() const noexcept { return q_; }

    friend bool operator==(const PqPair&, const PqPair&) = default;

private:
    PqPair(Int p, Int q) : p_(p), q_(q) {}

    Int p_;
    Int q_;
};

inline Triplet from_pq(const PqPair& pair) {
    const Int p = pair.p();
    const Int q = pair.q();
    const Int a = checked_mul(2, checked_mul(p, q));
    const Int b = checked_abs(checked_sub(checked_mul(p, p), checked_mul(q, q)));
    const Int c = checked_add(checked_mul(p, p), checked_mul(q, q));
    return Triplet::validate(a, b, c);
}

inline Triplet from_pq(Int p, Int q) { return from_pq(PqPair::make(p, q)); }

// All primitive triples with peak <= limit, each exactly once, sorted by
// (peak, even leg). Sweeps the coprime (p, q) grid; c = p^2 + q^2 bounds
// both parameters.
inline std::vector<Triplet> enumerate_peak_bounded(Int limit) {
    std::vector<Triplet> out;
    if (limit < 5) return out;
    const Int two_limit = limit > std::numeric_limits<Int>::max() / 2
                              ? std::numeric_limits<Int>::max()
                              : 2 * limit;
    const Int p_max = isqrt(two_limit - 1);
    for (Int p = 2; p <= p_max; p += 2) {
        for (Int q = 1;; q += 2) {
            const Int c = checked_add(checked_mul(p, p), checked_mul(q, q));
            if (c > limit) break;
            if (std::gcd(p, q) != 1) continue;
            out.push_back(from_pq(p, q));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Same contract as enumerate_peak_bounded, computed by exhaustive O(limit^2)
// scan over all leg pairs. Deliberately ignorant of the (p, q) sweep so the
// two routes can be cross-checked against each other.
inline std::vector<Triplet> brute_force_enumerate(Int limit) {
    std::vector<Triplet> out;
    if (limit < 5) return out;
    const Int c2_max = checked_mul(limit, limit);
    for (Int x = 1; x < limit; ++x) {
        for (Int y = x + 1;; ++y) {
            const Int s = x * x + y * y;
            if (s > c2_max) break;
            const Int c = isqrt(s);
            if (c * c == s && std::gcd(x, y) == 1) out.push_back(Triplet::validate(x, y, c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Leg completion: any a = 0 mod 4 extends to (a, a^2/4 - 1, a^2/4 + 1).
// No primitive triple has an even leg that is 2 mod 4, hence the error.
inline Triplet base_from_even_leg(Int a) {
    if (a <= 0) throw error(errc::invalid_argument, "even leg must be positive");
    if (a % 4 != 0)
        throw error(errc::not_multiple_of_four, std::to_string(a) + " is not 0 mod 4");
    const Int half_sq = checked_mul(a / 2, a / 2);  // a^2 / 4
    return Triplet::validate(a, half_sq - 1, half_sq + 1);
}

// Leg completion: any odd b >= 3 extends to ((b^2-1)/2, b, (b^2+1)/2).
// b = 1 degenerates to a zero leg.
inline Triplet base_from_odd_leg(Int b) {
    if (b <= 0) throw error(errc::invalid_argument, "odd leg must be positive");
    if (b % 2 == 0) throw error(errc::not_odd, std::to_string(b) + " is even");
    if (b == 1) throw error(errc::degenerate_leg, "b = 1 gives a = 0");
    const Int sq = checked_mul(b, b);
    return Triplet::validate((sq - 1) / 2, b, (sq + 1) / 2);
}

}  // namespace pythag
