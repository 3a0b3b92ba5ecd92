#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "matchers.hpp"
#include "pythag/gen.hpp"
#include "pythag/theorems.hpp"

using namespace pythag;

TEST_CASE("square residue sets") {
    CHECK(residue_square_set(7).residues == std::vector<Int>{0, 1, 2, 4});
    CHECK(residue_square_set(11).residues == std::vector<Int>{0, 1, 3, 4, 5, 9});
    CHECK(residue_square_set(12).residues == std::vector<Int>{0, 1, 4, 9});
    CHECK(residue_square_set(8).residues == std::vector<Int>{0, 1, 4});
    REQUIRE_THROWS_MATCHES(residue_square_set(1), error, KindIs(errc::invalid_argument));
}

TEST_CASE("half-range squaring already covers every square residue") {
    // (m - n)^2 = n^2 (mod m), so [0, m/2] sees the same squares as [0, m).
    for (Int m = 2; m <= 200; ++m) {
        std::set<Int> full;
        for (Int n = 0; n < m; ++n) full.insert(n * n % m);
        const ResidueSet half = residue_square_set(m);
        CAPTURE(m);
        CHECK(half.modulus == m);
        CHECK(std::vector<Int>(full.begin(), full.end()) == half.residues);
    }
}

TEST_CASE("zero-sum residue pairs distinguish the prime families") {
    for (const Int p : {5, 13, 17, 29, 37, 41, 53}) {
        CAPTURE(p);
        CHECK(has_zero_sum_square_pair(p));
    }
    for (const Int p : {7, 11, 19, 23, 31, 43, 47}) {
        CAPTURE(p);
        CHECK_FALSE(has_zero_sum_square_pair(p));
    }
}

TEST_CASE("excluded factors follow the closed form") {
    for (const Int n : {3, 7, 11, 19, 23, 31, 43, 47, 55, 59, 67, 91}) {
        CAPTURE(n);
        CHECK(excluded_prime_factor(n));
    }
    for (const Int n : {5, 13, 17, 25, 29, 37, 41, 53, 61, 65, 73, 89, 97}) {
        CAPTURE(n);
        CHECK_FALSE(excluded_prime_factor(n));
    }
    REQUIRE_THROWS_MATCHES(excluded_prime_factor(1), error, KindIs(errc::invalid_argument));
}

TEST_CASE("closed form and residue obstruction agree on primes") {
    for (Int p = 5; p <= 500; ++p) {
        if (!is_prime(p)) continue;
        CAPTURE(p);
        CHECK(excluded_prime_factor(p) == !has_zero_sum_square_pair(p));
    }
}

TEST_CASE("theorem identifiers are stable and exhaustive") {
    CHECK(all_theorems.size() == 7);
    std::set<std::string> names;
    for (const TheoremId id : all_theorems) names.insert(to_string(id));
    CHECK(names.size() == all_theorems.size());
    CHECK(names.count("OddPeak") == 1);
    CHECK(names.count("PerfectSquares") == 1);
    CHECK(names.count("Mod8") == 1);
    CHECK(names.count("Mod4") == 1);
    CHECK(names.count("NotDiv3") == 1);
    CHECK(names.count("Mod24") == 1);
    CHECK(names.count("Mod12TypeCoupling") == 1);
}

TEST_CASE("every predicate holds on the small exhaustive range") {
    const auto triples = enumerate_peak_bounded(2000);
    for (const TheoremId id : all_theorems) {
        for (const Triplet& t : triples) {
            CAPTURE(to_string(id), t);
            REQUIRE(check_triplet(id, t));
        }
    }
}

TEST_CASE("the suite reports per-theorem results") {
    const auto reports = run_suite(1000);
    REQUIRE(reports.size() == all_theorems.size());
    for (const auto& report : reports) {
        CAPTURE(to_string(report.theorem));
        CHECK(report.range_checked == 1000);
        CHECK(report.holds());
        CHECK(report.violations.empty());
    }
}

TEST_CASE("conjecture scan finds a witness for every small qualifying prime") {
    const auto entries = conjecture_scan(100);
    const std::vector<Int> expected = {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97};
    REQUIRE(entries.size() == expected.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CAPTURE(i);
        CHECK(entries[i].prime == expected[i]);
        REQUIRE(entries[i].witness.has_value());
        CHECK(entries[i].witness->c() == entries[i].prime);
    }
    CHECK(conjecture_scan(4).empty());
}
