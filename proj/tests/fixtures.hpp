#pragma once

#include <array>

#include "pythag/core.hpp"

// Hand-checked reference data. Every triple below satisfies a^2 + b^2 = c^2
// with gcd(a,b) = 1; the arithmetic was verified independently before being
// frozen here, so the tests pin behaviour rather than echo the library.
namespace fixtures {

using pythag::Int;
using pythag::PeakClass;

struct RawTriple {
    Int a, b, c;
};

struct PqCell {
    Int p, q;
    bool coprime;  // false marks the cells where from_pq must reject
    RawTriple t;   // meaningful only when coprime
};

// The full p in {2,4,6,8} x q in {1,3,5,7,9} sweep; 18 triples, 2 rejections.
inline constexpr std::array<PqCell, 20> table1 = {{
    {2, 1, true, {4, 3, 5}},
    {2, 3, true, {12, 5, 13}},
    {2, 5, true, {20, 21, 29}},
    {2, 7, true, {28, 45, 53}},
    {2, 9, true, {36, 77, 85}},
    {4, 1, true, {8, 15, 17}},
    {4, 3, true, {24, 7, 25}},
    {4, 5, true, {40, 9, 41}},
    {4, 7, true, {56, 33, 65}},
    {4, 9, true, {72, 65, 97}},
    {6, 1, true, {12, 35, 37}},
    {6, 3, false, {0, 0, 0}},
    {6, 5, true, {60, 11, 61}},
    {6, 7, true, {84, 13, 85}},
    {6, 9, false, {0, 0, 0}},
    {8, 1, true, {16, 63, 65}},
    {8, 3, true, {48, 55, 73}},
    {8, 5, true, {80, 39, 89}},
    {8, 7, true, {112, 15, 113}},
    {8, 9, true, {144, 17, 145}},
}};

struct ComposeRow {
    RawTriple t1, t2;
    int sign;  // +1 or -1
    RawTriple result;
};

// Every composition of {(4,3,5),(12,5,13)} with {(12,5,13),(8,15,17),(20,21,29)};
// the identical pair contributes a single row because its minus branch collapses.
inline constexpr std::array<ComposeRow, 11> table2 = {{
    {{4, 3, 5}, {12, 5, 13}, +1, {56, 33, 65}},
    {{4, 3, 5}, {12, 5, 13}, -1, {16, 63, 65}},
    {{4, 3, 5}, {8, 15, 17}, +1, {84, 13, 85}},
    {{4, 3, 5}, {8, 15, 17}, -1, {36, 77, 85}},
    {{4, 3, 5}, {20, 21, 29}, +1, {144, 17, 145}},
    {{4, 3, 5}, {20, 21, 29}, -1, {24, 143, 145}},
    {{12, 5, 13}, {12, 5, 13}, +1, {120, 119, 169}},
    {{12, 5, 13}, {8, 15, 17}, +1, {220, 21, 221}},
    {{12, 5, 13}, {8, 15, 17}, -1, {140, 171, 221}},
    {{12, 5, 13}, {20, 21, 29}, +1, {352, 135, 377}},
    {{12, 5, 13}, {20, 21, 29}, -1, {152, 345, 377}},
}};

struct PeakMark {
    Int n;
    PeakClass cls;
};

// Classification of every odd non-multiple-of-3 below 100.
inline constexpr std::array<PeakMark, 32> table3 = {{
    {5, PeakClass::prime_peak},
    {7, PeakClass::not_peak},
    {11, PeakClass::not_peak},
    {13, PeakClass::prime_peak},
    {17, PeakClass::prime_peak},
    {19, PeakClass::not_peak},
    {23, PeakClass::not_peak},
    {25, PeakClass::composite_peak},
    {29, PeakClass::prime_peak},
    {31, PeakClass::not_peak},
    {35, PeakClass::peak_only_with_gcd_violation},
    {37, PeakClass::prime_peak},
    {41, PeakClass::prime_peak},
    {43, PeakClass::not_peak},
    {47, PeakClass::not_peak},
    {49, PeakClass::not_peak},
    {53, PeakClass::prime_peak},
    {55, PeakClass::peak_only_with_gcd_violation},
    {59, PeakClass::not_peak},
    {61, PeakClass::prime_peak},
    {65, PeakClass::composite_peak},
    {67, PeakClass::not_peak},
    {71, PeakClass::not_peak},
    {73, PeakClass::prime_peak},
    {77, PeakClass::not_peak},
    {79, PeakClass::not_peak},
    {83, PeakClass::not_peak},
    {85, PeakClass::composite_peak},
    {89, PeakClass::prime_peak},
    {91, PeakClass::peak_only_with_gcd_violation},
    {95, PeakClass::peak_only_with_gcd_violation},
    {97, PeakClass::prime_peak},
}};

// The four primitive triples with peak 5 * 13 * 17 = 1105, in (c, a) order.
inline constexpr std::array<RawTriple, 4> quad1105 = {{
    {264, 1073, 1105},
    {576, 943, 1105},
    {744, 817, 1105},
    {1104, 47, 1105},
}};

// All sixteen primitive triples with peak <= 100, in (c, a) order.
inline constexpr std::array<RawTriple, 16> peaks_to_100 = {{
    {4, 3, 5},
    {12, 5, 13},
    {8, 15, 17},
    {24, 7, 25},
    {20, 21, 29},
    {12, 35, 37},
    {40, 9, 41},
    {28, 45, 53},
    {60, 11, 61},
    {16, 63, 65},
    {56, 33, 65},
    {48, 55, 73},
    {36, 77, 85},
    {84, 13, 85},
    {80, 39, 89},
    {72, 65, 97},
}};

inline pythag::Triplet make(const RawTriple& r) { return pythag::validate(r.a, r.b, r.c); }

}  // namespace fixtures
