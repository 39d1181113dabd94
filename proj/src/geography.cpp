#include "hlf/geography.hpp"

#include "hlf/report_json.hpp"

#include <ostream>

namespace hlf {

GeographyPoint make_geography_point(const FibrationNumerics& f, const InvariantSet& inv) {
    GeographyPoint p;
    p.g = f.g;
    p.n = f.n;
    p.s = inv.s;
    p.x = inv.x;
    p.chi_h = inv.chi_h;
    p.c1sq = inv.c1sq;
    p.slope = inv.slope;
    p.ratio = inv.ratio;
    p.sigma = inv.sigma;
    if (f.g == 2) {
        try {
            p.region = classify_region_g2(f, inv);
        } catch (const std::domain_error&) {
            // Slope outside [2,6): possible for unfiltered tuples, which
            // simply get no region label.
        }
    }
    return p;
}

std::vector<GeographyPoint> collect_geography(const SweepBox& box) {
    std::vector<GeographyPoint> out;
    enumerate_admissible(box, [&](const FibrationNumerics& f, const InvariantSet& inv) {
        out.push_back(make_geography_point(f, inv));
    });
    return out;
}

void emit_geography_csv(const std::vector<GeographyPoint>& points, std::ostream& os) {
    os << "g,n,s,x,chi_h,c1sq,slope,ratio,sigma,region\n";
    for (const GeographyPoint& p : points) {
        os << p.g << ',' << p.n.str() << ',' << p.s.str() << ',' << p.x.str() << ','
           << p.chi_h.fraction_string() << ',' << p.c1sq.fraction_string() << ','
           << p.slope.fraction_string() << ',' << p.ratio.fraction_string() << ','
           << p.sigma.fraction_string() << ',';
        if (p.region) os << to_string(*p.region);
        os << '\n';
    }
}

std::string geography_json(const std::vector<GeographyPoint>& points) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const GeographyPoint& p : points) {
        nlohmann::ordered_json row;
        row["g"] = p.g;
        row["n"] = json_of_int(p.n);
        row["s"] = json_of_int(p.s);
        row["x"] = json_of_int(p.x);
        auto put = [&](const char* k, const char* kd, const Rational& v) {
            row[k] = v.fraction_string();
            row[kd] = v.decimal_string();
        };
        put("chi_h", "chi_h_dec", p.chi_h);
        put("c1sq", "c1sq_dec", p.c1sq);
        put("slope", "slope_dec", p.slope);
        put("ratio", "ratio_dec", p.ratio);
        put("sigma", "sigma_dec", p.sigma);
        if (p.region)
            row["region"] = to_string(*p.region);
        else
            row["region"] = nullptr;
        rows.push_back(std::move(row));
    }
    return rows.dump(2);
}

}  // namespace hlf
