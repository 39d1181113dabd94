#pragma once

#include "hlf/invariants.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hlf {

enum class Verdict { holds, fails, not_applicable };

const char* to_string(Verdict v);

/// Outcome of one registry check on one fibration census. lhs/rhs are the
/// two sides of the defining inequality (or congruence) when the check is
/// applicable; witness carries named intermediate exact values in a fixed
/// order. Boolean witnesses are encoded as 0/1 rationals. anchor restates
/// the checked law as a formula.
struct CheckResult {
    std::string check_id;
    std::string name;
    Verdict verdict = Verdict::not_applicable;
    Rational lhs;
    Rational rhs;
    std::vector<std::pair<std::string, Rational>> witness;
    std::string anchor;
};

struct CheckInfo {
    const char* id;
    const char* name;
    const char* anchor;
    /// Conditional checks are theorems only for tuples passing the
    /// admissibility filter (integral chi_h plus the signature bound C05);
    /// unconditional ones are identities holding for every valid census.
    bool conditional;
};

/// The fixed, closed registry C01..C22 in evaluation order.
const std::vector<CheckInfo>& check_registry();

bool is_check_id(std::string_view id);

/// Optional hypotheses for run_all. treat_as_realizable suppresses
/// conditional checks (verdict not_applicable) on tuples that fail the
/// admissibility filter, so failures are never reported for tuples the
/// theory already rejects. simply_connected + b2plus >= 1 additionally
/// evaluate the minimum-cycle-count bound as the extra result id "min_n".
struct HypothesisFlags {
    bool treat_as_realizable = false;
    bool simply_connected = false;
    std::int64_t b2plus = 0;
};

/// Evaluates one check. Unknown ids throw std::invalid_argument listing the
/// valid ids. The overload taking an InvariantSet trusts it to match f.
CheckResult run_check(std::string_view check_id, const FibrationNumerics& f);
CheckResult run_check(std::string_view check_id, const FibrationNumerics& f, const InvariantSet& inv);

/// Evaluates the whole registry in order (every entry present, including
/// not_applicable ones), plus "min_n" when the flags enable it.
std::vector<CheckResult> run_all(const FibrationNumerics& f, const HypothesisFlags& flags = {});

/// Minimum number of non-separating vanishing cycles for a fibration on a
/// simply connected total space: 2g+2 when b2plus = 1, 2g+4 when b2plus > 1
/// (b2plus must then be odd). Unmet hypotheses throw std::invalid_argument.
Int min_nonseparating(std::int64_t g, std::int64_t b2plus, bool simply_connected);

/// Admissibility filter shared with the enumeration module: chi_h integral
/// and sigma <= n - s - 4.
bool integral_chi_h(const InvariantSet& inv);
bool admissible(const FibrationNumerics& f, const InvariantSet& inv);

}  // namespace hlf
