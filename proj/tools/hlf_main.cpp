#include "hlf/diophantine.hpp"
#include "hlf/geography.hpp"
#include "hlf/report_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using hlf::Int;
using hlf::Rational;

Int parse_decimal(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(what + " must be a nonnegative decimal integer, got '" +
                                    text + "'");
    return Int(text);
}

/// "--sep h:count,h:count" with omitted types defaulting to 0.
std::vector<Int> parse_sep(const std::string& text, std::int64_t g) {
    const std::int64_t slots = g >= 2 ? g / 2 : 0;
    std::vector<Int> sep(static_cast<std::size_t>(slots), Int(0));
    if (text.empty()) return sep;
    std::vector<bool> seen(sep.size(), false);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("separating entry '" + item +
                                        "' must have the form h:count");
        const std::string h_text = item.substr(0, colon);
        const Int h_big = parse_decimal(h_text, "separating type h");
        if (h_big < 1 || h_big > slots)
            throw std::invalid_argument("separating type h=" + h_text +
                                        " out of range 1.." + std::to_string(slots) +
                                        " for g=" + std::to_string(g));
        const auto h = static_cast<std::size_t>(static_cast<std::int64_t>(h_big));
        if (seen[h - 1])
            throw std::invalid_argument("separating type h=" + h_text + " given twice");
        seen[h - 1] = true;
        sep[h - 1] = parse_decimal(item.substr(colon + 1), "separating count for h=" + h_text);
    }
    return sep;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<hlf::Filter> parse_filters(const std::string& text) {
    std::vector<hlf::Filter> out;
    for (const std::string& name : split_list(text)) out.push_back(hlf::parse_filter(name));
    return out;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    os << text;
    os.flush();
    if (!os)
        throw std::invalid_argument("write to '" + path + "' failed");
}

int cmd_invariants(std::int64_t g, const std::string& n_text, const std::string& sep_text) {
    const hlf::FibrationNumerics f(g, parse_decimal(n_text, "n"), parse_sep(sep_text, g));
    const hlf::InvariantSet inv = hlf::compute_invariants(f);
    std::cout << hlf::invariants_json(f, inv).dump(2) << "\n";
    return 0;
}

int cmd_check(std::int64_t g, const std::string& n_text, const std::string& sep_text,
              const std::string& checks_text, const hlf::HypothesisFlags& flags) {
    const hlf::FibrationNumerics f(g, parse_decimal(n_text, "n"), parse_sep(sep_text, g));
    std::vector<hlf::CheckResult> results = hlf::run_all(f, flags);
    if (!checks_text.empty()) {
        const std::vector<std::string> wanted = split_list(checks_text);
        for (const std::string& id : wanted)
            if (!hlf::is_check_id(id) && id != "min_n")
                throw std::invalid_argument("unknown check id '" + id + "'");
        std::vector<hlf::CheckResult> kept;
        for (hlf::CheckResult& r : results)
            for (const std::string& id : wanted)
                if (r.check_id == id) {
                    kept.push_back(std::move(r));
                    break;
                }
        results = std::move(kept);
    }
    std::cout << hlf::check_run_json(f, results).dump(2) << "\n";
    for (const hlf::CheckResult& r : results)
        if (r.verdict == hlf::Verdict::fails) return 3;
    return 0;
}

int cmd_sweep(const hlf::SweepBox& box, const std::string& checks_text, int threads,
              const std::string& kernel_name, std::size_t cap, const std::string& out_path) {
    hlf::SweepOptions opt;
    opt.threads = threads;
    opt.kernel = hlf::kernels::parse_impl(kernel_name);
    opt.counterexample_cap = cap;
    if (!checks_text.empty()) opt.check_ids = split_list(checks_text);
    const hlf::SweepReport report = hlf::verify_theorems(box, opt);
    write_output(out_path, hlf::sweep_report_json(report).dump(2) + "\n");
    std::cerr << "sweep: " << report.tuples_enumerated << " tuples, " << report.tuples_admissible
              << " admissible, " << report.total_failures() << " failures\n";
    return report.total_failures() == 0 ? 0 : 3;
}

int cmd_solve(int genus, std::int64_t k_max, std::int64_t t_max, std::int64_t m_max,
              bool boundary, const std::string& format, const std::string& out_path) {
    std::ostringstream os;
    if (genus == 2 && boundary) {
        if (m_max < 0) throw std::invalid_argument("--m-max must be at least 0");
        const std::vector<Rational> seq = hlf::g2_boundary_ratio_sequence(Int(m_max));
        if (format == "csv") {
            os << "m,ratio\n";
            for (std::size_t i = 0; i < seq.size(); ++i)
                os << i << ',' << seq[i].fraction_string() << '\n';
        } else {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < seq.size(); ++i) {
                nlohmann::ordered_json row;
                row["m"] = i;
                row["ratio"] = seq[i].fraction_string();
                row["ratio_dec"] = seq[i].decimal_string();
                rows.push_back(std::move(row));
            }
            os << rows.dump(2) << "\n";
        }
    } else if (genus == 2) {
        if (k_max < 1 || t_max < 1)
            throw std::invalid_argument("--k-max and --t-max must be at least 1 for --genus 2");
        const auto rows = hlf::solve_g2_system(Int(k_max), Int(t_max));
        if (format == "csv") {
            os << "k,t,n,s,lambda\n";
            for (const auto& r : rows)
                os << r.k.str() << ',' << r.t.str() << ',' << r.n.str() << ',' << r.s.str()
                   << ',' << r.lambda.fraction_string() << '\n';
        } else {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : rows) {
                nlohmann::ordered_json row;
                row["k"] = hlf::json_of_int(r.k);
                row["t"] = hlf::json_of_int(r.t);
                row["n"] = hlf::json_of_int(r.n);
                row["s"] = hlf::json_of_int(r.s);
                row["lambda"] = r.lambda.fraction_string();
                row["lambda_dec"] = r.lambda.decimal_string();
                arr.push_back(std::move(row));
            }
            os << arr.dump(2) << "\n";
        }
    } else if (genus == 3) {
        if (m_max < 0) throw std::invalid_argument("--m-max must be at least 0 for --genus 3");
        const auto rows = hlf::solve_g3_system(Int(m_max));
        if (format == "csv") {
            os << "m,k,n,s,ratio,lambda\n";
            for (const auto& r : rows)
                os << r.m.str() << ',' << r.k.str() << ',' << r.n.str() << ',' << r.s.str()
                   << ',' << r.ratio.fraction_string() << ',' << r.lambda.fraction_string()
                   << '\n';
        } else {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : rows) {
                nlohmann::ordered_json row;
                row["m"] = hlf::json_of_int(r.m);
                row["k"] = hlf::json_of_int(r.k);
                row["n"] = hlf::json_of_int(r.n);
                row["s"] = hlf::json_of_int(r.s);
                row["ratio"] = r.ratio.fraction_string();
                row["ratio_dec"] = r.ratio.decimal_string();
                row["lambda"] = r.lambda.fraction_string();
                row["lambda_dec"] = r.lambda.decimal_string();
                arr.push_back(std::move(row));
            }
            os << arr.dump(2) << "\n";
        }
    } else {
        throw std::invalid_argument("--genus must be 2 or 3");
    }
    write_output(out_path, os.str());
    return 0;
}

int cmd_geography(const hlf::SweepBox& box, const std::string& format,
                  const std::string& out_path) {
    const std::vector<hlf::GeographyPoint> points = hlf::collect_geography(box);
    if (format == "csv") {
        std::ostringstream os;
        hlf::emit_geography_csv(points, os);
        write_output(out_path, os.str());
    } else {
        write_output(out_path, hlf::geography_json(points) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants, constraint checks, sweeps, and geography datasets for "
                 "hyperelliptic fibration numerics"};
    app.require_subcommand(1);

    std::function<int()> action;

    std::int64_t g = 0;
    std::string n_text, sep_text, checks_text;
    hlf::HypothesisFlags flags;

    auto* inv_cmd = app.add_subcommand("invariants", "print the exact invariants of one tuple");
    inv_cmd->add_option("--g", g, "fiber genus, at least 2")->required();
    inv_cmd->add_option("--n", n_text, "number of non-separating vanishing cycles")->required();
    inv_cmd->add_option("--sep", sep_text, "separating counts as h:count pairs, comma separated");
    inv_cmd->callback([&] { action = [&] { return cmd_invariants(g, n_text, sep_text); }; });

    auto* check_cmd = app.add_subcommand("check", "evaluate constraint checks on one tuple");
    check_cmd->add_option("--g", g, "fiber genus, at least 2")->required();
    check_cmd->add_option("--n", n_text, "number of non-separating vanishing cycles")->required();
    check_cmd->add_option("--sep", sep_text, "separating counts as h:count pairs");
    check_cmd->add_option("--checks", checks_text, "comma-separated check ids, default all");
    check_cmd->add_flag("--realizable", flags.treat_as_realizable,
                        "suppress conditional checks on tuples failing the admissibility filter");
    check_cmd->add_flag("--simply-connected", flags.simply_connected,
                        "assume a simply connected total space");
    check_cmd->add_option("--b2plus", flags.b2plus, "positive part of the intersection form");
    check_cmd->callback(
        [&] { action = [&] { return cmd_check(g, n_text, sep_text, checks_text, flags); }; });

    hlf::SweepBox box;
    std::string filters_text = "basic,integral_chi_h,signature_bound_c05";
    std::string kernel_name = "auto";
    std::string format = "csv";
    std::string out_path;
    int threads = 0;
    std::size_t cap = 100;

    auto* sweep_cmd = app.add_subcommand("sweep", "verify every check over a bounded box");
    sweep_cmd->add_option("--g-min", box.g_min, "smallest genus")->required();
    sweep_cmd->add_option("--g-max", box.g_max, "largest genus")->required();
    sweep_cmd->add_option("--n-max", box.n_max, "largest n")->required();
    sweep_cmd->add_option("--s-max", box.s_total_max, "largest total separating count")->required();
    sweep_cmd->add_option("--filters", filters_text, "admissibility pipeline for conditional checks");
    sweep_cmd->add_option("--checks", checks_text, "comma-separated check ids, default all");
    sweep_cmd->add_option("--threads", threads, "worker threads, 0 = hardware concurrency");
    sweep_cmd->add_option("--kernel", kernel_name, "batch kernel: auto, scalar, avx2");
    sweep_cmd->add_option("--cap", cap, "counterexamples kept per check");
    sweep_cmd->add_option("--out", out_path, "report path, default stdout");
    sweep_cmd->callback([&] {
        action = [&] {
            box.filters = parse_filters(filters_text);
            return cmd_sweep(box, checks_text, threads, kernel_name, cap, out_path);
        };
    });

    int genus = 0;
    std::int64_t k_max = 0, t_max = 0, m_max = -1;
    bool boundary = false;

    auto* solve_cmd = app.add_subcommand("solve", "emit a parametric admissibility family");
    solve_cmd->add_option("--genus", genus, "2 or 3")->required();
    solve_cmd->add_option("--k-max", k_max, "largest k (genus 2)");
    solve_cmd->add_option("--t-max", t_max, "largest t (genus 2)");
    solve_cmd->add_option("--m-max", m_max, "largest m (genus 3, or genus-2 boundary ratios)");
    solve_cmd->add_flag("--boundary-ratios", boundary,
                        "emit the genus-2 boundary ratio sequence instead of the family table");
    solve_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    solve_cmd->add_option("--out", out_path, "output path, default stdout");
    solve_cmd->callback([&] {
        action = [&] { return cmd_solve(genus, k_max, t_max, m_max, boundary, format, out_path); };
    });

    auto* geo_cmd = app.add_subcommand("geography", "emit geography rows for a bounded box");
    geo_cmd->add_option("--g-min", box.g_min, "smallest genus")->required();
    geo_cmd->add_option("--g-max", box.g_max, "largest genus")->required();
    geo_cmd->add_option("--n-max", box.n_max, "largest n")->required();
    geo_cmd->add_option("--s-max", box.s_total_max, "largest total separating count")->required();
    geo_cmd->add_option("--filters", filters_text, "admissibility pipeline");
    geo_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    geo_cmd->add_option("--out", out_path, "output path, default stdout");
    geo_cmd->callback([&] {
        action = [&] {
            box.filters = parse_filters(filters_text);
            return cmd_geography(box, format, out_path);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
