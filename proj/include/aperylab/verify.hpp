#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aperylab/checked.hpp"

namespace aperylab {

struct Check {
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerificationReport {
    std::string title;
    std::vector<Check> checks;

    bool passed() const;
    std::size_t failures() const;
    std::string str(bool failures_only = false) const;
};

/// Inclusive integer range, written "LO..HI" or just "HI".
struct SweepRange {
    Int lo = 0;
    Int hi = 0;
    static SweepRange parse(const std::string& text, Int default_lo);
};

/// Theorems with a property suite.
inline constexpr int kVerifiableTheorems[] = {1, 2, 3, 5, 6, 8, 10};

/// Runs the property suite for a theorem. Sweep meaning per theorem:
///   1, 2  genus range of the enumerated semigroups (default 0..15)
///   3     range of a, with 2 <= b < a (default 3..8), three primes each
///   5     range of n (default 2..6), two primes each
///   6     range of n (default 2..12)
///   8     range of odd primes q (default 3..13), p the least valid prime
///   10    genus range for the census floor h_g >= f_{g+1} (default 0..15);
///         constructions use m <= 8 and 6 <= m <= 9, the Fibonacci identity g <= 20
VerificationReport verify_theorem(int theorem, std::optional<SweepRange> sweep = std::nullopt,
                                  unsigned threads = 1);

}  // namespace aperylab
