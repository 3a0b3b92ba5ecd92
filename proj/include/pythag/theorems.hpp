#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "pythag/core.hpp"
#include "pythag/decomp.hpp"
#include "pythag/gen.hpp"

namespace pythag {

// The set of squares modulo m: { n^2 mod m : 0 <= n < m }, sorted, with 0.
struct ResidueSet {
    Int modulus;
    std::vector<Int> residues;
};

inline ResidueSet residue_square_set(Int m) {
    if (m < 2) throw error(errc::invalid_argument, "modulus must be >= 2");
    std::vector<Int> r;
    r.reserve(static_cast<std::size_t>(m / 2) + 1);
    // (m - n)^2 = n^2 mod m, so scanning n <= m/2 already covers the set
    for (Int n = 0; n <= m / 2; ++n) r.push_back(checked_mul(n, n) % m);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return {m, r};
}

// True when two nonzero squares mod m sum to 0 mod m. For a prime modulus
// this decides whether the modulus can divide a peak: no such pair means
// r_p + r_q can never reach the modulus, so no peak is divisible by it.
inline bool has_zero_sum_square_pair(Int m) {
    const ResidueSet set = residue_square_set(m);
    for (const Int r : set.residues) {
        if (r == 0) continue;
        const Int complement = m - r;
        if (complement != 0 &&
            std::binary_search(set.residues.begin(), set.residues.end(), complement))
            return true;
    }
    return false;
}

// Closed form of the exclusion theorem: 3 and every number 7 or 11 mod 12
// can never divide a peak. For primes this must agree with the residue
// obstruction computed by has_zero_sum_square_pair; the test suite holds
// the two routes against each other.
inline bool excluded_prime_factor(Int n) {
    if (n < 2) throw error(errc::invalid_argument, "factor candidate must be >= 2");
    return n == 3 || n % 12 == 7 || n % 12 == 11;
}

// Stable identifiers for the machine-checked statements.
enum class TheoremId {
    odd_peak,             // c is odd
    perfect_squares,      // c - a and c + a are perfect squares
    mod8,                 // exactly one of c - b, c + b is divisible by 8
    mod4,                 // c = 1 mod 4
    not_div3,             // 3 divides exactly one leg and never the peak
    mod24,                // c^2 = 1 mod 24
    mod12_type_coupling,  // type 1 <=> c = 1 mod 12, type 2 <=> c = 5 mod 12
};

inline constexpr std::array<TheoremId, 7> all_theorems = {
    TheoremId::odd_peak, TheoremId::perfect_squares, TheoremId::mod8,  TheoremId::mod4,
    TheoremId::not_div3, TheoremId::mod24,           TheoremId::mod12_type_coupling,
};

inline const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::odd_peak: return "OddPeak";
        case TheoremId::perfect_squares: return "PerfectSquares";
        case TheoremId::mod8: return "Mod8";
        case TheoremId::mod4: return "Mod4";
        case TheoremId::not_div3: return "NotDiv3";
        case TheoremId::mod24: return "Mod24";
        case TheoremId::mod12_type_coupling: return "Mod12TypeCoupling";
    }
    throw error(errc::unknown_theorem);
}

inline bool check_triplet(TheoremId id, const Triplet& t) {
    switch (id) {
        case TheoremId::odd_peak:
            return t.c() % 2 == 1;
        case TheoremId::perfect_squares:
            return is_perfect_square(t.c() - t.a()) && is_perfect_square(t.c() + t.a());
        case TheoremId::mod8:
            return ((t.c() - t.b()) % 8 == 0) != ((t.c() + t.b()) % 8 == 0);
        case TheoremId::mod4:
            return t.c() % 4 == 1;
        case TheoremId::not_div3:
            return t.c() % 3 != 0 && (t.a() % 3 == 0) != (t.b() % 3 == 0);
        case TheoremId::mod24:
            return (t.c() % 24) * (t.c() % 24) % 24 == 1;
        case TheoremId::mod12_type_coupling:
            return classify_type(t) == TripletType::type1 ? t.c() % 12 == 1 : t.c() % 12 == 5;
    }
    throw error(errc::unknown_theorem);
}

struct TheoremReport {
    TheoremId theorem;
    Int range_checked;                // every triple with peak <= this bound was tested
    std::vector<Triplet> violations;  // empty exactly when the theorem holds on the range

    bool holds() const noexcept { return violations.empty(); }
};

// Applies every predicate to every primitive triple with peak <= peak_bound.
inline std::vector<TheoremReport> run_suite(Int peak_bound) {
    const std::vector<Triplet> triples = enumerate_peak_bounded(peak_bound);
    std::vector<TheoremReport> reports;
    reports.reserve(all_theorems.size());
    for (const TheoremId id : all_theorems) {
        TheoremReport report{id, peak_bound, {}};
        for (const Triplet& t : triples) {
            if (!check_triplet(id, t)) report.violations.push_back(t);
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

// One row of the open-question scan: a prime 1 or 5 mod 12 and, when the
// two-square search succeeds, a triple witnessing that it is a peak.
struct ConjectureEntry {
    Int prime;
    std::optional<Triplet> witness;
};

// Scans every prime p <= limit with p = 1 or 5 mod 12 for a witness triple.
// Absence of unwitnessed primes is empirical support, never a proof.
inline std::vector<ConjectureEntry> conjecture_scan(Int limit) {
    std::vector<ConjectureEntry> out;
    if (limit < 5) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (Int d = 2; d * d <= limit; ++d) {
        if (composite[static_cast<std::size_t>(d)]) continue;
        for (Int m = d * d; m <= limit; m += d) composite[static_cast<std::size_t>(m)] = true;
    }
    for (Int p = 5; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        if (p % 12 != 1 && p % 12 != 5) continue;
        ConjectureEntry entry{p, std::nullopt};
        if (const auto base = find_two_square_base(p)) entry.witness = from_pq(*base);
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace pythag
