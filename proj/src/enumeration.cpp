#include "hlf/enumeration.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace hlf {

const char* to_string(Filter f) {
    switch (f) {
        case Filter::basic: return "basic";
        case Filter::integral_chi_h: return "integral_chi_h";
        case Filter::signature_bound_c05: return "signature_bound_c05";
        case Filter::divisibility_c15_c16: return "divisibility_c15_c16";
    }
    return "?";
}

Filter parse_filter(std::string_view name) {
    for (Filter f : {Filter::basic, Filter::integral_chi_h, Filter::signature_bound_c05,
                     Filter::divisibility_c15_c16})
        if (name == to_string(f)) return f;
    throw std::invalid_argument(
        "unknown filter '" + std::string(name) +
        "'; valid: basic, integral_chi_h, signature_bound_c05, divisibility_c15_c16");
}

void SweepBox::validate() const {
    if (g_min < 2)
        throw std::invalid_argument("sweep box: g_min must be >= 2, got " + std::to_string(g_min));
    if (g_max < g_min)
        throw std::invalid_argument("sweep box: g_max must be >= g_min, got g_max=" +
                                    std::to_string(g_max) + " < g_min=" + std::to_string(g_min));
    if (n_max < 1)
        throw std::invalid_argument("sweep box: n_max must be >= 1, got " + std::to_string(n_max));
    if (s_total_max < 0)
        throw std::invalid_argument("sweep box: s_total_max must be >= 0, got " +
                                    std::to_string(s_total_max));
    if (filters.empty())
        throw std::invalid_argument("sweep box: filter pipeline must contain at least 'basic'");
    static constexpr std::array<Filter, 4> canonical = {
        Filter::basic, Filter::integral_chi_h, Filter::signature_bound_c05,
        Filter::divisibility_c15_c16};
    std::size_t pos = 0;
    for (Filter f : filters) {
        while (pos < canonical.size() && canonical[pos] != f) ++pos;
        if (pos == canonical.size())
            throw std::invalid_argument(
                "sweep box: filters must be an ordered subset of basic, integral_chi_h, "
                "signature_bound_c05, divisibility_c15_c16");
        ++pos;
    }
    if (filters.front() != Filter::basic)
        throw std::invalid_argument("sweep box: filter pipeline must start with 'basic'");
}

bool SweepBox::has_filter(Filter f) const {
    return std::find(filters.begin(), filters.end(), f) != filters.end();
}

std::vector<Filter> admissible_filters() {
    return {Filter::basic, Filter::integral_chi_h, Filter::signature_bound_c05};
}

namespace {

Int binomial(std::int64_t top, std::int64_t bottom) {
    Int r = 1;
    for (std::int64_t i = 1; i <= bottom; ++i) {
        r *= top - bottom + i;
        r /= i;
    }
    return r;
}

/// Lexicographic successor of a composition with sum <= budget; false when
/// v is the last one (budget, 0, ..., 0).
bool next_composition(std::vector<std::int64_t>& v, std::int64_t& sum, std::int64_t budget) {
    const std::size_t d = v.size();
    if (sum < budget) {
        ++v[d - 1];
        ++sum;
        return true;
    }
    std::size_t j = d;
    for (std::size_t i = d; i-- > 0;) {
        if (v[i] > 0) {
            j = i;
            break;
        }
    }
    if (j == d || j == 0) return false;
    sum -= v[j] - 1;
    v[j] = 0;
    ++v[j - 1];
    return true;
}

}  // namespace

Int count_basic_tuples(const SweepBox& box) {
    box.validate();
    Int total = 0;
    for (std::int64_t g = box.g_min; g <= box.g_max; ++g)
        total += Int(box.n_max) * binomial(box.s_total_max + g / 2, g / 2);
    return total;
}

void enumerate_admissible(const SweepBox& box,
                          const std::function<void(const FibrationNumerics&, const InvariantSet&)>& yield) {
    box.validate();
    const bool want_integral = box.has_filter(Filter::integral_chi_h);
    const bool want_c05 = box.has_filter(Filter::signature_bound_c05);
    const bool want_div = box.has_filter(Filter::divisibility_c15_c16);

    for (std::int64_t g = box.g_min; g <= box.g_max; ++g) {
        const std::size_t d = FibrationNumerics::sep_slots(g);
        for (std::int64_t n = 1; n <= box.n_max; ++n) {
            std::vector<std::int64_t> comp(d, 0);
            std::int64_t sum = 0;
            do {
                std::vector<Int> sep(comp.begin(), comp.end());
                FibrationNumerics f(g, Int(n), std::move(sep));
                InvariantSet inv = compute_invariants(f);
                if (want_integral && !integral_chi_h(inv)) continue;
                if (want_c05 && !(inv.sigma <= Rational(f.n - inv.s - 4))) continue;
                if (want_div) {
                    if (run_check("C15", f, inv).verdict == Verdict::fails) continue;
                    if (run_check("C16", f, inv).verdict == Verdict::fails) continue;
                }
                yield(f, inv);
            } while (next_composition(comp, sum, box.s_total_max));
        }
    }
}

std::vector<std::pair<FibrationNumerics, InvariantSet>> collect_admissible(const SweepBox& box) {
    std::vector<std::pair<FibrationNumerics, InvariantSet>> out;
    enumerate_admissible(box, [&](const FibrationNumerics& f, const InvariantSet& inv) {
        out.emplace_back(f, inv);
    });
    return out;
}

const char* to_string(RegionLabel r) {
    switch (r) {
        case RegionLabel::I: return "I";
        case RegionLabel::II: return "II";
        case RegionLabel::III: return "III";
    }
    return "?";
}

RegionLabel classify_region_g2(const FibrationNumerics& f) {
    return classify_region_g2(f, compute_invariants(f));
}

RegionLabel classify_region_g2(const FibrationNumerics& f, const InvariantSet& inv) {
    if (f.g != 2)
        throw std::domain_error("classify_region_g2: defined for genus 2 only, got g=" +
                                std::to_string(f.g));
    const Rational& lam = inv.slope;
    const Rational& r = inv.ratio;

    std::optional<RegionLabel> by_slope;
    if (Rational(2) <= lam && lam <= Rational(4))
        by_slope = RegionLabel::I;
    else if (Rational(4) < lam && lam < Rational(5))
        by_slope = RegionLabel::II;
    else if (Rational(5) <= lam && lam < Rational(6))
        by_slope = RegionLabel::III;

    std::optional<RegionLabel> by_ratio;
    if (Rational(0) <= r && r <= Rational(1, 3))
        by_ratio = RegionLabel::I;
    else if (Rational(1, 3) < r && r < Rational(3, 4))
        by_ratio = RegionLabel::II;
    else if (Rational(3, 4) <= r && r < Rational(2))
        by_ratio = RegionLabel::III;

    if (!by_slope || !by_ratio)
        throw std::domain_error("classify_region_g2: slope " + lam.fraction_string() +
                                " lies outside the region taxonomy [2,6)");
    if (*by_slope != *by_ratio)
        throw std::logic_error("classify_region_g2: slope and ratio taxonomies disagree at " +
                               to_string(f));
    return *by_slope;
}

}  // namespace hlf
