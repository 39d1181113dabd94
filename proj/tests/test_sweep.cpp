#include "hlf/sweep.hpp"

#include "hlf/report_json.hpp"

#include <doctest.h>

using hlf::Filter;
using hlf::Rational;
using hlf::SweepBox;
using hlf::SweepOptions;
using hlf::SweepReport;
using hlf::verify_theorems;

namespace {

SweepBox make_box(std::int64_t g_min, std::int64_t g_max, std::int64_t n_max,
                  std::int64_t s_total_max, std::vector<Filter> filters) {
    SweepBox box;
    box.g_min = g_min;
    box.g_max = g_max;
    box.n_max = n_max;
    box.s_total_max = s_total_max;
    box.filters = std::move(filters);
    return box;
}

std::string dump(const SweepReport& r) { return hlf::sweep_report_json(r).dump(2); }

}  // namespace

TEST_CASE("unknown check ids are rejected") {
    const SweepBox box = make_box(2, 2, 4, 2, {Filter::basic});
    SweepOptions opt;
    opt.check_ids = {"C01", "C99"};
    CHECK_THROWS_WITH_AS(verify_theorems(box, opt), "sweep: unknown check id 'C99'",
                         std::invalid_argument);
}

TEST_CASE("restricted check selection shapes the report") {
    const SweepBox box = make_box(2, 2, 10, 4, hlf::admissible_filters());
    SweepOptions opt;
    opt.threads = 1;
    opt.check_ids = {"C01", "C14"};
    const SweepReport r = verify_theorems(box, opt);

    REQUIRE(r.per_check.size() == 3);
    CHECK(r.per_check.count("C01") == 1);
    CHECK(r.per_check.count("C14") == 1);
    CHECK(r.per_check.count("C14.lower") == 1);

    CHECK(r.per_check.at("C01").pass == r.tuples_enumerated);
    CHECK(r.per_check.at("C14.lower").pass == r.tuples_enumerated);
    const auto& c14 = r.per_check.at("C14");
    CHECK(c14.pass + c14.not_applicable == r.tuples_admissible);
    CHECK(c14.fail == 0);

    // identity tallies cover every basic tuple even when no unconditional
    // check is selected
    REQUIRE(r.identities.size() == 2);
    CHECK(r.identities.at("slope_forms").pass == r.tuples_enumerated);
    CHECK(r.identities.at("signature_roundtrip").pass == r.tuples_enumerated);

    SweepOptions cond_only = opt;
    cond_only.check_ids = {"C03"};
    const SweepReport rc = verify_theorems(box, cond_only);
    CHECK(rc.per_check.size() == 1);
    CHECK(rc.identities.at("slope_forms").pass == rc.tuples_enumerated);
    CHECK(rc.identities.at("signature_roundtrip").pass == rc.tuples_enumerated);

    SweepOptions cond_exact = cond_only;
    cond_exact.force_exact = true;
    CHECK(dump(verify_theorems(box, cond_exact)) == dump(rc));
}

TEST_CASE("tallies on a mixed genus-2 and genus-3 box") {
    const SweepBox box = make_box(2, 3, 10, 6, hlf::admissible_filters());
    SweepOptions opt;
    opt.threads = 1;
    const SweepReport r = verify_theorems(box, opt);

    CHECK(r.tuples_enumerated == 140);
    CHECK(r.tuples_enumerated == hlf::count_basic_tuples(box));
    CHECK(r.tuples_admissible == 8);
    CHECK(r.tuples_admissible == hlf::collect_admissible(box).size());
    CHECK(r.total_failures() == 0);

    REQUIRE(r.per_check.size() == 23);
    for (const auto& [id, tally] : r.per_check) {
        CHECK(tally.fail == 0);
        CHECK(tally.counterexamples.empty());
        CHECK_FALSE(tally.capped);
    }
    for (const char* id : {"C01", "C02", "C20", "C14.lower"}) {
        CHECK(r.per_check.at(id).pass == 140);
        CHECK(r.per_check.at(id).not_applicable == 0);
    }
    for (const auto& info : hlf::check_registry()) {
        if (!info.conditional) continue;
        const auto& tally = r.per_check.at(info.id);
        CHECK(tally.pass + tally.not_applicable == 8);
    }
    CHECK(r.per_check.at("C06").not_applicable == 2);
    CHECK(r.per_check.at("C10").not_applicable == 2);
    CHECK(r.per_check.at("C19").not_applicable == 2);
    CHECK(r.per_check.at("C11").not_applicable == 1);
    CHECK(r.per_check.at("C22").not_applicable == 8);
    CHECK(r.per_check.at("C05").pass == 8);

    for (const auto& [name, tally] : r.identities) {
        CHECK(tally.pass == 140);
        CHECK(tally.fail == 0);
        CHECK(tally.failing_tuples.empty());
    }
}

TEST_CASE("capped counterexamples are the lexicographically least failures") {
    const SweepBox box = make_box(2, 2, 6, 6, {Filter::basic});
    SweepOptions opt;
    opt.threads = 1;
    opt.check_ids = {"C05"};
    opt.counterexample_cap = 3;
    const SweepReport r = verify_theorems(box, opt);

    const auto& tally = r.per_check.at("C05");
    CHECK(tally.fail == 23);
    CHECK(tally.pass == 42 - 23);
    CHECK(tally.capped);
    REQUIRE(tally.counterexamples.size() == 3);
    CHECK(hlf::to_string(tally.counterexamples[0].tuple) == "(g=2, n=1, sep=[0])");
    CHECK(hlf::to_string(tally.counterexamples[1].tuple) == "(g=2, n=1, sep=[1])");
    CHECK(hlf::to_string(tally.counterexamples[2].tuple) == "(g=2, n=1, sep=[2])");
    for (const auto& cex : tally.counterexamples) {
        CHECK(cex.result.check_id == "C05");
        CHECK(cex.result.verdict == hlf::Verdict::fails);
    }
    CHECK(r.total_failures() == 23);

    SweepOptions exact = opt;
    exact.force_exact = true;
    CHECK(dump(verify_theorems(box, exact)) == dump(r));

    SweepOptions roomy = opt;
    roomy.counterexample_cap = 100;
    const SweepReport r2 = verify_theorems(box, roomy);
    CHECK_FALSE(r2.per_check.at("C05").capped);
    CHECK(r2.per_check.at("C05").counterexamples.size() == 23);
}

TEST_CASE("extrema on the genus-2 survey box") {
    const SweepBox box = make_box(2, 2, 22, 40, hlf::admissible_filters());
    const SweepReport r = verify_theorems(box);

    REQUIRE(r.extrema.count(2) == 1);
    const auto& ext = r.extrema.at(2);

    REQUIRE(ext.max_ratio.set);
    CHECK(ext.max_ratio.value == Rational(39, 22));
    CHECK(hlf::to_string(*ext.max_ratio.at) == "(g=2, n=22, sep=[39])");

    REQUIRE(ext.min_total.set);
    CHECK(ext.min_total.value == Rational(7));
    CHECK(hlf::to_string(*ext.min_total.at) == "(g=2, n=4, sep=[3])");

    REQUIRE(ext.max_slope.set);
    CHECK(ext.max_slope.value == Rational(59, 10));
    CHECK(hlf::to_string(*ext.max_slope.at) == "(g=2, n=22, sep=[39])");

    REQUIRE(ext.min_slope_spos.set);
    CHECK(ext.min_slope_spos.value == Rational(5, 2));
    CHECK(hlf::to_string(*ext.min_slope_spos.at) == "(g=2, n=18, sep=[1])");
}

TEST_CASE("boxes with no admissible tuples leave extrema unset") {
    const SweepBox box = make_box(2, 2, 3, 40, hlf::admissible_filters());
    const SweepReport r = verify_theorems(box);

    CHECK(r.tuples_admissible == 0);
    REQUIRE(r.extrema.count(2) == 1);
    const auto& ext = r.extrema.at(2);
    CHECK_FALSE(ext.max_ratio.set);
    CHECK_FALSE(ext.min_total.set);
    CHECK_FALSE(ext.max_slope.set);
    CHECK_FALSE(ext.min_slope_spos.set);
    for (const auto& info : hlf::check_registry()) {
        if (!info.conditional) continue;
        const auto& tally = r.per_check.at(info.id);
        CHECK(tally.pass + tally.fail + tally.not_applicable == 0);
    }
    CHECK(r.per_check.at("C01").pass == r.tuples_enumerated);
}

TEST_CASE("report is bitwise stable across threads, kernels, and the exact path") {
    const SweepBox box = make_box(2, 3, 40, 12, hlf::admissible_filters());

    SweepOptions base;
    base.threads = 1;
    base.kernel = hlf::kernels::Impl::scalar;
    const std::string reference = dump(verify_theorems(box, base));

    SweepOptions threaded = base;
    threaded.threads = 4;
    CHECK(dump(verify_theorems(box, threaded)) == reference);

    SweepOptions automatic = base;
    automatic.kernel = hlf::kernels::Impl::automatic;
    CHECK(dump(verify_theorems(box, automatic)) == reference);

    if (hlf::kernels::avx2_supported()) {
        SweepOptions vec = base;
        vec.kernel = hlf::kernels::Impl::avx2;
        CHECK(dump(verify_theorems(box, vec)) == reference);
    }

    SweepOptions exact = base;
    exact.force_exact = true;
    CHECK(dump(verify_theorems(box, exact)) == reference);

    const SweepReport r = verify_theorems(box, base);
    CHECK(r.tuples_enumerated == 1040);
    CHECK(r.tuples_admissible == 64);
    CHECK(r.tuples_admissible == hlf::collect_admissible(box).size());
    CHECK(r.total_failures() == 0);
}

TEST_CASE("partition chunking splits a genus and merges seamlessly") {
    // C(102, 2) = 5151 compositions for two slots under a budget of 100,
    // which crosses the 4096-composition partition boundary within one genus.
    const SweepBox box = make_box(4, 4, 6, 100, hlf::admissible_filters());

    SweepOptions base;
    base.threads = 1;
    base.check_ids = {"C02", "C05", "C14"};
    const SweepReport r = verify_theorems(box, base);
    CHECK(r.tuples_enumerated == 5151 * 6);
    CHECK(r.tuples_enumerated == hlf::count_basic_tuples(box));
    CHECK(r.identities.at("slope_forms").pass == r.tuples_enumerated);
    CHECK(r.total_failures() == 0);

    const std::string reference = dump(r);
    SweepOptions threaded = base;
    threaded.threads = 4;
    CHECK(dump(verify_theorems(box, threaded)) == reference);

    SweepOptions exact = threaded;
    exact.force_exact = true;
    CHECK(dump(verify_theorems(box, exact)) == reference);
}
