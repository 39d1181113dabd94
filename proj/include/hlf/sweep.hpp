#pragma once

#include "hlf/enumeration.hpp"
#include "hlf/kernels.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace hlf {

struct SweepOptions {
    /// 0 = use hardware concurrency. The report is bitwise identical for
    /// every thread count; partitioning is static and merged in order.
    int threads = 0;
    kernels::Impl kernel = kernels::Impl::automatic;
    std::size_t counterexample_cap = 100;
    /// Empty = every registry check.
    std::vector<std::string> check_ids;
    /// Forces the exact rational path even when the box fits the int64
    /// kernels; reports must come out identical either way.
    bool force_exact = false;
};

struct Counterexample {
    FibrationNumerics tuple;
    CheckResult result;
};

struct CheckTally {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t not_applicable = 0;
    bool capped = false;
    /// Lexicographically least failing tuples, at most the configured cap;
    /// fail is always the exact total.
    std::vector<Counterexample> counterexamples;
};

struct IdentityTally {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::vector<std::string> failing_tuples;  // capped like counterexamples
};

struct ExtremeValue {
    bool set = false;
    Rational value;
    std::optional<FibrationNumerics> at;  // lexicographically least attainer
};

struct GenusExtrema {
    ExtremeValue max_ratio;       // max s/n
    ExtremeValue min_total;       // min n+s
    ExtremeValue max_slope;       // max lambda
    ExtremeValue min_slope_spos;  // min lambda among s > 0 tuples
};

/// Aggregate of one exhaustive verification run. Unconditional checks
/// (C01, C02, C14 lower half as "C14.lower", C20) are tallied over every
/// basic tuple of the box; conditional checks over the tuples passing the
/// box's filter pipeline. Identity tallies cover the slope-form agreement
/// and the signature round-trip over every basic tuple. Extrema are tracked
/// per genus over the filtered tuples.
struct SweepReport {
    SweepBox box;
    std::uint64_t tuples_enumerated = 0;
    std::uint64_t tuples_admissible = 0;
    std::map<std::string, CheckTally> per_check;
    std::map<std::string, IdentityTally> identities;
    std::map<std::int64_t, GenusExtrema> extrema;

    std::uint64_t total_failures() const;
};

SweepReport verify_theorems(const SweepBox& box, const SweepOptions& opt = {});

}  // namespace hlf
