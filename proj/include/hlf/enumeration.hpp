#pragma once

#include "hlf/checks.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace hlf {

/// Admissibility pipeline stages, applied in this fixed order:
///   basic               n >= 1, every s_h >= 0 (inherent to enumeration)
///   integral_chi_h      chi_h is an integer, i.e. 4(2g+1) | ng+4x
///   signature_bound_c05 sigma <= n - s - 4
///   divisibility_c15_c16  checks C15 and C16 do not fail
enum class Filter { basic, integral_chi_h, signature_bound_c05, divisibility_c15_c16 };

const char* to_string(Filter f);
Filter parse_filter(std::string_view name);

/// Bounded sweep domain: g in [g_min, g_max], 1 <= n <= n_max, and separating
/// counts over all compositions (s_1, ..., s_{floor(g/2)}) with total <= s_total_max.
struct SweepBox {
    std::int64_t g_min = 2;
    std::int64_t g_max = 2;
    std::int64_t n_max = 1;
    std::int64_t s_total_max = 0;
    std::vector<Filter> filters{Filter::basic};

    /// Throws std::invalid_argument naming the violated invariant. Filter
    /// order must follow the canonical listing above, without duplicates.
    void validate() const;

    bool has_filter(Filter f) const;
};

/// Default admissibility pipeline: basic + integral_chi_h + signature_bound_c05.
std::vector<Filter> admissible_filters();

/// Number of basic tuples in the box (exact).
Int count_basic_tuples(const SweepBox& box);

/// Yields every tuple passing the box's filter pipeline, in lexicographic
/// (g, n, sep) order. Empty stream is legal.
void enumerate_admissible(const SweepBox& box,
                          const std::function<void(const FibrationNumerics&, const InvariantSet&)>& yield);

std::vector<std::pair<FibrationNumerics, InvariantSet>> collect_admissible(const SweepBox& box);

/// Region taxonomy for genus-2 slopes: I = [2,4] (ratio [0,1/3]),
/// II = (4,5) (ratio (1/3,3/4)), III = [5,6) (ratio [3/4,2)). The intervals
/// partition [2,6); admissible genus-2 tuples always land inside.
enum class RegionLabel { I, II, III };

const char* to_string(RegionLabel r);

/// Classifies by the slope interval and independently by the ratio interval,
/// throwing std::logic_error if the two taxonomies ever disagreed. Throws
/// std::domain_error for g != 2 and for slopes outside [2, 6).
RegionLabel classify_region_g2(const FibrationNumerics& f);
RegionLabel classify_region_g2(const FibrationNumerics& f, const InvariantSet& inv);

}  // namespace hlf
