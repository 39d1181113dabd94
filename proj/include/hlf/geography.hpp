#pragma once

#include "hlf/enumeration.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace hlf {

/// One row of a geography dataset. Rationals are serialized as exact "p/q"
/// strings (always with the denominator); the JSON form adds advisory
/// 6-significant-digit decimal renderings under *_dec keys. region is set
/// for genus-2 rows only.
struct GeographyPoint {
    std::int64_t g;
    Int n, s, x;
    Rational chi_h, c1sq, slope, ratio, sigma;
    std::optional<RegionLabel> region;
};

GeographyPoint make_geography_point(const FibrationNumerics& f, const InvariantSet& inv);

/// All filtered tuples of the box as geography rows, lexicographic order.
std::vector<GeographyPoint> collect_geography(const SweepBox& box);

/// CSV with the fixed header g,n,s,x,chi_h,c1sq,slope,ratio,sigma,region.
/// Byte-stable for identical input; empty input emits the header only.
void emit_geography_csv(const std::vector<GeographyPoint>& points, std::ostream& os);

/// JSON array of objects with identical keys (region null outside genus 2)
/// plus *_dec decimal renderings. Byte-stable for identical input.
std::string geography_json(const std::vector<GeographyPoint>& points);

}  // namespace hlf
