#include "hlf/report_json.hpp"

#include <limits>

namespace hlf {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_json(const Rational& v) { return v.fraction_string(); }

ordered_json tuple_json(const FibrationNumerics& f) {
    ordered_json t;
    t["g"] = f.g;
    t["n"] = json_of_int(f.n);
    ordered_json sep = ordered_json::array();
    for (const Int& c : f.sep) sep.push_back(json_of_int(c));
    t["sep"] = std::move(sep);
    return t;
}

}  // namespace

ordered_json json_of_int(const Int& v) {
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

ordered_json invariants_json(const FibrationNumerics& f, const InvariantSet& inv) {
    ordered_json j;
    j["tuple"] = tuple_json(f);
    ordered_json vals;
    vals["x"] = json_of_int(inv.x);
    vals["s"] = json_of_int(inv.s);
    vals["euler"] = json_of_int(inv.euler);
    auto put = [&](const char* k, const Rational& v) {
        vals[k] = rational_json(v);
        vals[std::string(k) + "_dec"] = v.decimal_string();
    };
    put("sigma", inv.sigma);
    put("chi_h", inv.chi_h);
    put("c1sq", inv.c1sq);
    put("k_f_sq", inv.k_f_sq);
    put("chi_f", inv.chi_f);
    put("slope", inv.slope);
    put("ratio", inv.ratio);
    j["invariants"] = std::move(vals);
    return j;
}

ordered_json check_result_json(const CheckResult& r) {
    ordered_json j;
    j["id"] = r.check_id;
    j["name"] = r.name;
    j["verdict"] = to_string(r.verdict);
    j["lhs"] = rational_json(r.lhs);
    j["lhs_dec"] = r.lhs.decimal_string();
    j["rhs"] = rational_json(r.rhs);
    j["rhs_dec"] = r.rhs.decimal_string();
    ordered_json w = ordered_json::array();
    for (const auto& [name, value] : r.witness) {
        ordered_json entry;
        entry["name"] = name;
        entry["value"] = rational_json(value);
        entry["value_dec"] = value.decimal_string();
        w.push_back(std::move(entry));
    }
    j["witness"] = std::move(w);
    j["anchor"] = r.anchor;
    return j;
}

ordered_json check_run_json(const FibrationNumerics& f, const std::vector<CheckResult>& results) {
    ordered_json j;
    j["tuple"] = tuple_json(f);
    ordered_json checks = ordered_json::array();
    for (const CheckResult& r : results) checks.push_back(check_result_json(r));
    j["checks"] = std::move(checks);
    return j;
}

ordered_json sweep_report_json(const SweepReport& report) {
    ordered_json j;
    ordered_json box;
    box["g_min"] = report.box.g_min;
    box["g_max"] = report.box.g_max;
    box["n_max"] = report.box.n_max;
    box["s_total_max"] = report.box.s_total_max;
    ordered_json filters = ordered_json::array();
    for (Filter f : report.box.filters) filters.push_back(to_string(f));
    box["filters"] = std::move(filters);
    j["box"] = std::move(box);
    j["tuples_enumerated"] = report.tuples_enumerated;
    j["tuples_admissible"] = report.tuples_admissible;

    ordered_json checks;
    for (const auto& [id, tally] : report.per_check) {
        ordered_json t;
        t["pass"] = tally.pass;
        t["fail"] = tally.fail;
        t["not_applicable"] = tally.not_applicable;
        t["capped"] = tally.capped;
        ordered_json cex = ordered_json::array();
        for (const Counterexample& c : tally.counterexamples) {
            ordered_json e;
            e["tuple"] = tuple_json(c.tuple);
            e["check"] = check_result_json(c.result);
            cex.push_back(std::move(e));
        }
        t["counterexamples"] = std::move(cex);
        checks[id] = std::move(t);
    }
    j["checks"] = std::move(checks);

    ordered_json ids;
    for (const auto& [name, tally] : report.identities) {
        ordered_json t;
        t["pass"] = tally.pass;
        t["fail"] = tally.fail;
        t["failing_tuples"] = tally.failing_tuples;
        ids[name] = std::move(t);
    }
    j["identities"] = std::move(ids);

    ordered_json extrema;
    for (const auto& [g, ge] : report.extrema) {
        ordered_json e;
        auto put = [&](const char* k, const ExtremeValue& v) {
            if (!v.set) {
                e[k] = nullptr;
                return;
            }
            ordered_json entry;
            entry["value"] = rational_json(v.value);
            entry["value_dec"] = v.value.decimal_string();
            entry["at"] = tuple_json(*v.at);
            e[k] = std::move(entry);
        };
        put("max_ratio", ge.max_ratio);
        put("min_total", ge.min_total);
        put("max_slope", ge.max_slope);
        put("min_slope_spos", ge.min_slope_spos);
        extrema[std::to_string(g)] = std::move(e);
    }
    j["extrema"] = std::move(extrema);
    j["total_failures"] = report.total_failures();
    return j;
}

}  // namespace hlf
