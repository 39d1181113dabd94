#pragma once

#include "hlf/rational.hpp"

#include <cstdint>
#include <vector>

namespace hlf {

/// Vanishing-cycle census of a candidate hyperelliptic genus-g Lefschetz
/// fibration over the sphere: n non-separating cycles plus, for each
/// h = 1..floor(g/2), a count sep[h-1] of separating cycles of type h.
///
/// Construction validates:
///   - g >= 2
///   - n >= 1 (a fibration cannot consist of separating cycles alone)
///   - sep has exactly floor(g/2) entries, each >= 0
/// Violations throw std::invalid_argument naming the broken invariant.
struct FibrationNumerics {
    std::int64_t g;
    Int n;
    std::vector<Int> sep;

    FibrationNumerics(std::int64_t g_, Int n_, std::vector<Int> sep_);

    static std::size_t sep_slots(std::int64_t g) { return static_cast<std::size_t>(g / 2); }

    /// s = total number of separating vanishing cycles.
    Int separating_total() const;

    /// x = sum over h of h*(g-h)*s_h.
    Int weighted_sum() const;

    friend bool operator==(const FibrationNumerics& a, const FibrationNumerics& b) {
        return a.g == b.g && a.n == b.n && a.sep == b.sep;
    }
};

/// Lexicographic order on (g, n, sep); the canonical enumeration order used
/// by sweeps and counterexample reporting.
bool lex_less(const FibrationNumerics& a, const FibrationNumerics& b);

/// Compact display form "(g=2, n=4, sep=[3])".
std::string to_string(const FibrationNumerics& f);

}  // namespace hlf
