#include "hlf/checks.hpp"

#include <doctest.h>

using hlf::CheckResult;
using hlf::FibrationNumerics;
using hlf::Int;
using hlf::Rational;
using hlf::Verdict;

namespace {

FibrationNumerics make(std::int64_t g, long long n, std::vector<long long> sep) {
    std::vector<Int> s(sep.begin(), sep.end());
    return FibrationNumerics(g, Int(n), s);
}

Verdict verdict_of(std::string_view id, const FibrationNumerics& f) {
    return hlf::run_check(id, f).verdict;
}

}  // namespace

TEST_CASE("registry is the fixed closed list C01..C22") {
    const auto& reg = hlf::check_registry();
    REQUIRE(reg.size() == 22);
    for (std::size_t i = 0; i < reg.size(); ++i) {
        const std::string expected = "C" + std::string(i + 1 < 10 ? "0" : "") + std::to_string(i + 1);
        CHECK(reg[i].id == expected);
        CHECK(hlf::is_check_id(reg[i].id));
        CHECK(std::string(reg[i].name).size() > 0);
        CHECK(std::string(reg[i].anchor).size() > 0);
    }
    CHECK_FALSE(hlf::is_check_id("C23"));
    CHECK_FALSE(hlf::is_check_id("c01"));
    CHECK_FALSE(hlf::is_check_id(""));
    CHECK_FALSE(reg[0].conditional);   // C01
    CHECK_FALSE(reg[1].conditional);   // C02
    CHECK_FALSE(reg[19].conditional);  // C20
    CHECK(reg[2].conditional);         // C03
    CHECK(reg[4].conditional);         // C05
}

TEST_CASE("unknown check ids are rejected with the valid list") {
    CHECK_THROWS_AS(hlf::run_check("C00", make(2, 4, {3})), std::invalid_argument);
    CHECK_THROWS_AS(hlf::run_check("bogus", make(2, 4, {3})), std::invalid_argument);
    try {
        hlf::run_check("C99", make(2, 4, {3}));
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("C01") != std::string::npos);
        CHECK(msg.find("C22") != std::string::npos);
    }
}

TEST_CASE("C01 refinement s(g-1) <= x") {
    CHECK(verdict_of("C01", make(2, 4, {3})) == Verdict::holds);
    CHECK(verdict_of("C01", make(8, 1, {0, 0, 0, 2})) == Verdict::holds);
    // every valid census satisfies it: x >= s(g-1) >= sg/2 by the weights
    const CheckResult r = hlf::run_check("C01", make(5, 2, {1, 3}));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.lhs == Rational(4 * 5));          // sg
    CHECK(r.rhs == Rational(2 * (4 + 18)));   // 2x
}

TEST_CASE("C02 biconditional and factored excess") {
    SUBCASE("s = 0 pins the slope to 4 - 4/g") {
        const CheckResult r = hlf::run_check("C02", make(7, 9, {0, 0, 0}));
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.lhs == Rational(Int(24), Int(7)));
        CHECK(r.rhs == Rational(Int(24), Int(7)));
    }
    SUBCASE("s > 0 forces strict excess") {
        const CheckResult r = hlf::run_check("C02", make(2, 4, {3}));
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.lhs == Rational(5));
        CHECK(r.rhs == Rational(2));
    }
}

TEST_CASE("C05 signature bound separates admissible from rejected tuples") {
    CHECK(verdict_of("C05", make(2, 4, {3})) == Verdict::holds);  // equality -3 <= -3
    CHECK(verdict_of("C05", make(2, 1, {0})) == Verdict::fails);
    CHECK(verdict_of("C05", make(2, 20, {0})) == Verdict::holds);
}

TEST_CASE("C06 Noether line at genus 2, not applicable elsewhere") {
    const CheckResult r = hlf::run_check("C06", make(2, 20, {0}));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.lhs == Rational(-4));  // c1^2
    CHECK(r.rhs == Rational(3));   // 6 chi_h - 3
    REQUIRE(r.witness.size() == 2);
    CHECK(r.witness[0].first == "identity_rhs");
    CHECK(r.witness[0].second == Rational(-4));  // 2 chi_h - 6 + s
    CHECK(r.witness[1].first == "identity_holds");
    CHECK(r.witness[1].second == Rational(1));
    CHECK(verdict_of("C06", make(3, 4, {2})) == Verdict::not_applicable);
}

TEST_CASE("C09 admissibility systems") {
    CHECK(verdict_of("C09", make(2, 4, {3})) == Verdict::holds);
    CHECK(verdict_of("C09", make(2, 1, {0})) == Verdict::fails);
    CHECK(verdict_of("C09", make(3, 4, {2})) == Verdict::holds);
    CHECK(verdict_of("C09", make(3, 5, {2})) == Verdict::fails);  // 3n+8s = 31, no k
    CHECK(verdict_of("C09", make(4, 4, {0, 0})) == Verdict::not_applicable);
}

TEST_CASE("C10 sharpness biconditional with both sides false") {
    const CheckResult r = hlf::run_check("C10", make(2, 6, {2}));
    CHECK(r.verdict == Verdict::holds);
    CHECK(verdict_of("C10", make(2, 4, {3})) == Verdict::holds);  // both sides true
    CHECK(verdict_of("C10", make(3, 4, {2})) == Verdict::not_applicable);
}

TEST_CASE("C11 chains need enough non-separating cycles") {
    CHECK(verdict_of("C11", make(2, 3, {0})) == Verdict::not_applicable);
    CHECK(verdict_of("C11", make(3, 7, {1})) == Verdict::not_applicable);
    const CheckResult equality = hlf::run_check("C11", make(2, 4, {3}));
    CHECK(equality.verdict == Verdict::holds);
    bool saw_equality_flag = false;
    for (const auto& [name, value] : equality.witness)
        if (name == "equality_expected") {
            saw_equality_flag = true;
            CHECK(value == Rational(1));
        }
    CHECK(saw_equality_flag);
    CHECK(verdict_of("C11", make(2, 9, {3})) == Verdict::holds);
    CHECK(verdict_of("C11", make(3, 8, {0})) == Verdict::holds);
}

TEST_CASE("C12 general slope upper bound") {
    const CheckResult r = hlf::run_check("C12", make(2, 6, {2}));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.lhs == Rational(4));
    CHECK(r.rhs == Rational(6));
}

TEST_CASE("C14 keeps the lower bound unconditional and gates the upper at n > 2") {
    SUBCASE("n <= 2 skips the upper half") {
        const CheckResult r = hlf::run_check("C14", make(2, 1, {0}));
        CHECK(r.verdict == Verdict::holds);
        bool found = false;
        for (const auto& [name, value] : r.witness)
            if (name == "upper_applicable") {
                found = true;
                CHECK(value == Rational(0));
            }
        CHECK(found);
    }
    SUBCASE("n > 2 checks both halves") {
        CHECK(verdict_of("C14", make(2, 4, {3})) == Verdict::holds);
        CHECK(verdict_of("C14", make(5, 12, {3, 1})) == Verdict::holds);
    }
}

TEST_CASE("C15 divisibility applies only at integral chi_h") {
    CHECK(verdict_of("C15", make(3, 5, {0})) == Verdict::not_applicable);
    CHECK(verdict_of("C15", make(3, 4, {2})) == Verdict::holds);   // g odd, 4 | n
    CHECK(verdict_of("C15", make(3, 28, {0})) == Verdict::holds);
    CHECK(verdict_of("C15", make(2, 20, {0})) == Verdict::holds);  // g = 2 mod 4, 2 | n
}

TEST_CASE("C16 quarter-integer structure") {
    CHECK(verdict_of("C16", make(2, 4, {3})) == Verdict::holds);
    CHECK(verdict_of("C16", make(2, 1, {1})) == Verdict::not_applicable);  // chi_h not integral
    const CheckResult r = hlf::run_check("C16", make(3, 4, {2}));
    CHECK(r.verdict == Verdict::holds);
    for (const auto& [name, value] : r.witness)
        if (name == "t") CHECK(value == Rational(1));
}

TEST_CASE("C19 and C22 genus gates") {
    CHECK(verdict_of("C19", make(2, 4, {3})) == Verdict::holds);
    CHECK(verdict_of("C19", make(3, 4, {2})) == Verdict::not_applicable);
    CHECK(verdict_of("C22", make(5, 1, {0, 0})) == Verdict::not_applicable);
    CHECK(verdict_of("C22", make(6, 3, {1, 1, 0})) == Verdict::holds);
    CHECK(verdict_of("C22", make(6, 1, {2, 0, 0})) == Verdict::fails);
}

TEST_CASE("admissibility filter") {
    const FibrationNumerics good = make(2, 4, {3});
    const FibrationNumerics bad = make(2, 1, {0});
    CHECK(hlf::admissible(good, hlf::compute_invariants(good)));
    CHECK_FALSE(hlf::admissible(bad, hlf::compute_invariants(bad)));
    CHECK(hlf::integral_chi_h(hlf::compute_invariants(make(3, 28, {0}))));
    CHECK_FALSE(hlf::integral_chi_h(hlf::compute_invariants(make(3, 27, {0}))));
}

TEST_CASE("run_all covers the registry in order") {
    const auto results = hlf::run_all(make(2, 4, {3}));
    REQUIRE(results.size() == 22);
    for (std::size_t i = 0; i < results.size(); ++i)
        CHECK(results[i].check_id == hlf::check_registry()[i].id);
    for (const CheckResult& r : results) CHECK(r.verdict != Verdict::fails);
}

TEST_CASE("run_all with realizability suppresses conditional checks on rejected tuples") {
    hlf::HypothesisFlags flags;
    flags.treat_as_realizable = true;
    const auto results = hlf::run_all(make(2, 1, {0}), flags);  // fails C05, not admissible
    for (const CheckResult& r : results) {
        if (r.check_id == "C01" || r.check_id == "C02" || r.check_id == "C20")
            CHECK(r.verdict == Verdict::holds);
        else
            CHECK(r.verdict == Verdict::not_applicable);
    }
}

TEST_CASE("run_all appends the minimum-cycle-count bound under its hypotheses") {
    hlf::HypothesisFlags flags;
    flags.simply_connected = true;
    flags.b2plus = 1;
    const auto with_min = hlf::run_all(make(2, 6, {0}), flags);
    REQUIRE(with_min.size() == 23);
    CHECK(with_min.back().check_id == "min_n");
    CHECK(with_min.back().verdict == Verdict::holds);  // 6 >= 2g+2 = 6
    const auto short_run = hlf::run_all(make(2, 5, {0}), flags);
    CHECK(short_run.back().verdict == Verdict::fails);
    CHECK(hlf::run_all(make(2, 6, {0})).size() == 22);
}

TEST_CASE("min_nonseparating thresholds and hypothesis errors") {
    CHECK(hlf::min_nonseparating(2, 1, true) == 6);
    CHECK(hlf::min_nonseparating(5, 1, true) == 12);
    CHECK(hlf::min_nonseparating(2, 3, true) == 8);
    CHECK(hlf::min_nonseparating(3, 5, true) == 10);
    CHECK_THROWS_AS(hlf::min_nonseparating(1, 1, true), std::invalid_argument);
    CHECK_THROWS_AS(hlf::min_nonseparating(2, 1, false), std::invalid_argument);
    CHECK_THROWS_AS(hlf::min_nonseparating(2, 0, true), std::invalid_argument);
    CHECK_THROWS_AS(hlf::min_nonseparating(2, 2, true), std::invalid_argument);
}

TEST_CASE("every conditional check holds on a spread of admissible tuples") {
    const FibrationNumerics tuples[] = {
        make(2, 4, {3}), make(2, 20, {0}), make(2, 6, {2}), make(3, 28, {0}), make(3, 8, {4}),
    };
    for (const FibrationNumerics& f : tuples) {
        const auto inv = hlf::compute_invariants(f);
        REQUIRE(hlf::admissible(f, inv));
        for (const auto& info : hlf::check_registry())
            CHECK(hlf::run_check(info.id, f, inv).verdict != Verdict::fails);
    }
}
