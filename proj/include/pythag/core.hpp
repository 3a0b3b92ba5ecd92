#pragma once

#include <cassert>
#include <compare>
#include <numeric>
#include <ostream>

#include "pythag/errors.hpp"
#include "pythag/numeric.hpp"

namespace pythag {

// A primitive Pythagorean triple: a^2 + b^2 = c^2 with gcd(a, b, c) = 1.
// The even leg always sits in the a slot, the odd leg in b, and the peak
// (the hypotenuse, treated purely as a number) in c. Instances exist only
// through validate() or the generator operations, so a constructed Triplet
// always satisfies a = 0 mod 4, b and c odd, a,b < c and a + b > c.
class Triplet {
public:
    Int a() const noexcept { return a_; }  // even leg
    Int b() const noexcept { return b_; }  // odd leg
    Int c() const noexcept { return c_; }  // peak

    // Checks the equation, the gcd condition and leg parity. Accepts the
    // legs in either order and canonicalizes the even one into the a slot.
    static Triplet validate(Int x, Int y, Int z) {
        if (x <= 0 || y <= 0 || z <= 0)
            throw error(errc::invalid_argument, "triple components must be positive");
        const Int lhs = checked_add(checked_mul(x, x), checked_mul(y, y));
        if (lhs != checked_mul(z, z))
            throw error(errc::not_pythagorean,
                        std::to_string(x) + "^2 + " + std::to_string(y) +
                            "^2 != " + std::to_string(z) + "^2");
        if (std::gcd(std::gcd(x, y), z) != 1)
            throw error(errc::common_factor, "gcd(" + std::to_string(x) + ", " +
                                                 std::to_string(y) + ", " + std::to_string(z) +
                                                 ") > 1");
        if (x % 2 == y % 2)
            throw error(errc::parity_violation, "legs must be one even, one odd");
        const Int even = x % 2 == 0 ? x : y;
        const Int odd = x % 2 == 0 ? y : x;
        return Triplet(even, odd, z);
    }

    friend bool operator==(const Triplet&, const Triplet&) = default;

    // Orders by (peak, even leg); the odd leg is determined by those two.
    friend std::strong_ordering operator<=>(const Triplet& lhs, const Triplet& rhs) {
        if (auto cmp = lhs.c_ <=> rhs.c_; cmp != std::strong_ordering::equal) return cmp;
        return lhs.a_ <=> rhs.a_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Triplet& t) {
        return os << "(" << t.a_ << ", " << t.b_ << ", " << t.c_ << ")";
    }

private:
    Triplet(Int a, Int b, Int c) : a_(a), b_(b), c_(c) {
        assert(a_ % 4 == 0 && b_ % 2 == 1 && c_ % 2 == 1);
        assert(a_ < c_ && b_ < c_ && a_ + b_ > c_);
    }

    Int a_;
    Int b_;
    Int c_;
};

inline Triplet validate(Int x, Int y, Int z) { return Triplet::validate(x, y, z); }

// Type 1 has the even leg divisible by 3 (so a = 0 mod 12); Type 2 has the
// odd leg divisible by 3 (so b = 3 mod 6). Exactly one case holds for every
// primitive triple.
enum class TripletType { type1, type2 };

inline const char* to_string(TripletType t) {
    return t == TripletType::type1 ? "Type1" : "Type2";
}

inline TripletType classify_type(const Triplet& t) {
    const bool a_div3 = t.a() % 3 == 0;
    const bool b_div3 = t.b() % 3 == 0;
    assert(a_div3 != b_div3);  // 3 divides one leg, never both, never the peak
    (void)b_div3;
    return a_div3 ? TripletType::type1 : TripletType::type2;
}

// c mod 12, which is 1 for type-1 triples and 5 for type-2 triples.
inline Int peak_residue(const Triplet& t) {
    const Int r = t.c() % 12;
    assert(r == 1 || r == 5);
    return r;
}

// What an arbitrary integer can be with respect to peaks: a prime peak, a
// composite peak, a peak only of non-primitive triples (the gcd condition
// sacrificed), or not a peak at all.
enum class PeakClass { not_peak, prime_peak, composite_peak, peak_only_with_gcd_violation };

inline const char* to_string(PeakClass pc) {
    switch (pc) {
        case PeakClass::not_peak: return "NotPeak";
        case PeakClass::prime_peak: return "PrimePeak";
        case PeakClass::composite_peak: return "CompositePeak";
        case PeakClass::peak_only_with_gcd_violation: return "PeakOnlyWithGcdViolation";
    }
    return "UnknownClass";
}

}  // namespace pythag
