#pragma once

#include <exception>
#include <string>

namespace pythag {

// Every failure a library operation can report. The CLI maps each kind to
// exactly one diagnostic name via errc_name().
enum class errc {
    not_pythagorean,        // x^2 + y^2 != z^2
    common_factor,          // gcd(a, b, c) > 1, or composed peaks share a prime
    parity_violation,       // both legs same parity / (p, q) not one-even-one-odd
    not_coprime,            // gcd(p, q) > 1 in the generator pair
    not_multiple_of_four,   // even-leg completion needs a = 0 mod 4
    not_odd,                // odd-leg completion needs an odd leg
    degenerate_leg,         // odd-leg completion fails for b = 1 (gives a = 0)
    degenerate_result,      // a composition produced a zero leg
    overflow,               // exact 64-bit arithmetic would wrap
    no_representation,      // prime is not a sum of two squares (p = 2 or p = 3 mod 4)
    same_peak_required,     // split needs two triples sharing one peak
    identical_triples,      // split needs two distinct triples
    reconstruction_failed,  // recovered base pairs fail the cross-checks
    unknown_theorem,        // theorem id outside the fixed enumeration
    invalid_argument,       // precondition violation (nonpositive input, empty list, ...)
};

inline const char* errc_name(errc kind) {
    switch (kind) {
        case errc::not_pythagorean: return "NotPythagorean";
        case errc::common_factor: return "CommonFactor";
        case errc::parity_violation: return "ParityViolation";
        case errc::not_coprime: return "NotCoprime";
        case errc::not_multiple_of_four: return "NotMultipleOfFour";
        case errc::not_odd: return "NotOdd";
        case errc::degenerate_leg: return "DegenerateLeg";
        case errc::degenerate_result: return "DegenerateResult";
        case errc::overflow: return "Overflow";
        case errc::no_representation: return "NoRepresentation";
        case errc::same_peak_required: return "SamePeakRequired";
        case errc::identical_triples: return "IdenticalTriples";
        case errc::reconstruction_failed: return "ReconstructionFailed";
        case errc::unknown_theorem: return "UnknownTheorem";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

class error : public std::exception {
public:
    explicit error(errc kind) : kind_(kind), msg_(errc_name(kind)) {}
    error(errc kind, const std::string& detail)
        : kind_(kind), msg_(std::string(errc_name(kind)) + ": " + detail) {}

    errc kind() const noexcept { return kind_; }
    const char* what() const noexcept override { return msg_.c_str(); }

private:
    errc kind_;
    std::string msg_;
};

}  // namespace pythag
