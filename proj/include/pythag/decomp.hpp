#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "pythag/compose.hpp"
#include "pythag/core.hpp"
#include "pythag/gen.hpp"

namespace pythag {

struct PrimePower {
    Int prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with primes strictly increasing; the product of
// prime^exponent equals the input.
using Factorization = std::vector<PrimePower>;

inline Factorization factorize(Int n) {
    if (n < 2) throw error(errc::invalid_argument, "factorize requires n >= 2");
    Factorization out;
    for (Int d = 2; d * d <= n; d += d == 2 ? 1 : 2) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.push_back({d, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

// Exhaustive search for the (even, odd) pair with even^2 + odd^2 = n.
// Returns nothing when no such pair exists or when the pair is not coprime.
inline std::optional<PqPair> find_two_square_base(Int n) {
    for (Int even = 2; even * even < n; even += 2) {
        const Int rest = n - even * even;
        const Int odd = isqrt(rest);
        if (odd * odd == rest && std::gcd(even, odd) == 1) return PqPair::make(even, odd);
    }
    return std::nullopt;
}

// The unique generator pair of a prime peak: even^2 + odd^2 = p. Exists for
// every prime p = 1 mod 4 and for no other prime.
inline PqPair prime_to_base(Int p) {
    if (!is_prime(p)) throw error(errc::invalid_argument, std::to_string(p) + " is not prime");
    if (p == 2 || p % 4 == 3)
        throw error(errc::no_representation,
                    std::to_string(p) + " is not a sum of two squares");
    const auto pair = find_two_square_base(p);
    assert(pair.has_value());  // guaranteed for primes 1 mod 4
    return *pair;
}

// All primitive triples with peak exactly n, sorted by even leg. Built from
// the prime-peak bases: one triple per prime factor (raised by power() for
// repeated factors), combined under every sign vector. Each distinct prime
// contributes one sign degree of freedom; flipping all signs at once gives
// the conjugate of the whole product, so the first factor's sign is pinned.
inline std::vector<Triplet> triples_for_peak(Int n) {
    if (n < 1) throw error(errc::invalid_argument, "peak candidate must be >= 1");
    std::vector<Triplet> out;
    if (n == 1) return out;
    const Factorization factors = factorize(n);
    for (const auto& [prime, exponent] : factors) {
        if (prime == 2 || prime % 4 == 3) return out;  // excluded factor: no primitive triple
    }
    std::vector<Triplet> bases;
    bases.reserve(factors.size());
    for (const auto& [prime, exponent] : factors) {
        const Triplet base = from_pq(prime_to_base(prime));
        bases.push_back(exponent == 1 ? base : power(base, exponent));
    }
    const std::size_t free_signs = bases.size() - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_signs); ++mask) {
        SignVector signs(free_signs, Sign::plus);
        for (std::size_t i = 0; i < free_signs; ++i) {
            if (mask >> i & 1) signs[i] = Sign::minus;
        }
        out.push_back(compose_many(bases, signs));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Classification of an arbitrary integer. A number with a primitive triple
// is a prime or composite peak; one whose every solution of x^2 + y^2 = n^2
// shares a factor with n (equivalently: some prime factor is 1 mod 4 but the
// primitive test fails) is a peak only with the gcd condition sacrificed.
inline PeakClass classify_number(Int n) {
    if (n < 1) throw error(errc::invalid_argument, "classification requires n >= 1");
    if (!triples_for_peak(n).empty())
        return is_prime(n) ? PeakClass::prime_peak : PeakClass::composite_peak;
    if (n > 1) {
        for (const auto& [prime, exponent] : factorize(n)) {
            if (prime % 4 == 1) return PeakClass::peak_only_with_gcd_violation;
        }
    }
    return PeakClass::not_peak;
}

struct SplitResult {
    Triplet first;   // peak c1
    Triplet second;  // peak c2; c1 * c2 equals the shared input peak

    friend bool operator==(const SplitResult&, const SplitResult&) = default;
};

// Inverts the pairwise composition: two distinct triples (A1, B1, c1*c2) and
// (A2, B2, c1*c2) determine base pairs through
//     gcd(A1 + A2, B2 - B1) = 2*b1,   gcd(A1 - A2, B2 - B1) = 2*b2,
// ordered so that A1 > A2, and then a2 = (A1 + A2)/(2*b1) and
// a1 = (A1 - A2)/(2*b2). The recovered pairs are cross-checked against all
// four defining identities, normalized, and validated before returning.
inline SplitResult split_peak(const Triplet& t1, const Triplet& t2) {
    if (t1.c() != t2.c())
        throw error(errc::same_peak_required, "inputs have peaks " + std::to_string(t1.c()) +
                                                  " and " + std::to_string(t2.c()));
    if (t1 == t2) throw error(errc::identical_triples, "inputs must be distinct");

    const Triplet& hi = t1.a() > t2.a() ? t1 : t2;
    const Triplet& lo = t1.a() > t2.a() ? t2 : t1;
    const Int a_hi = hi.a(), b_hi = hi.b();   // A1, B1
    const Int a_lo = lo.a(), b_lo = lo.b();   // A2, B2; A1 > A2 forces B1 < B2
    const Int b_diff = b_lo - b_hi;

    const Int g1 = std::gcd(a_hi + a_lo, b_diff);  // 2*b1
    const Int g2 = std::gcd(a_hi - a_lo, b_diff);  // 2*b2
    assert(g1 % 2 == 0 && g2 % 2 == 0);            // A's even, B's odd, differences even
    const Int b1 = g1 / 2;
    const Int b2 = g2 / 2;
    const Int a2 = (a_hi + a_lo) / g1;
    const Int a1 = (a_hi - a_lo) / g2;

    const Int prod_a = checked_mul(a1, a2);
    const Int prod_b = checked_mul(b1, b2);
    if (checked_sub(prod_a, prod_b) != b_hi || checked_add(prod_a, prod_b) != b_lo ||
        checked_add(checked_mul(a2, b1), checked_mul(a1, b2)) != a_hi ||
        checked_sub(checked_mul(a2, b1), checked_mul(a1, b2)) != a_lo)
        throw error(errc::reconstruction_failed, "recovered pairs fail the cross-checks");

    const auto pair_to_triple = [](Int x, Int y) {
        const Int g = std::gcd(x, y);  // residual common factor, normalized out
        x /= g;
        y /= g;
        const Int norm = checked_add(checked_mul(x, x), checked_mul(y, y));
        const Int c = isqrt(norm);
        if (c * c != norm)
            throw error(errc::reconstruction_failed, "recovered pair has a non-square norm");
        return Triplet::validate(x, y, c);
    };
    try {
        SplitResult result{pair_to_triple(a1, b1), pair_to_triple(a2, b2)};
        if (checked_mul(result.first.c(), result.second.c()) != t1.c())
            throw error(errc::reconstruction_failed, "recovered peaks do not multiply back");
        return result;
    } catch (const error& e) {
        if (e.kind() == errc::overflow || e.kind() == errc::reconstruction_failed) throw;
        throw error(errc::reconstruction_failed, e.what());
    }
}

}  // namespace pythag
