#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fixtures.hpp"
#include "latpath/steps.hpp"

using namespace latpath;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("2/4") == make_rational(1, 2));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    for (long n = 0; n < static_cast<long>(fixtures::catalan.size()); ++n) {
        CHECK(catalan_number(n) == fixtures::catalan[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("step sets") {
    const StepSet t = StepSet::parse("2,-1,0,2,1");
    CHECK(t.to_string() == "{-1,0,1,2}");
    CHECK(t.max_step() == 2);
    CHECK(t.size() == 4);
    CHECK(t.contains(0));
    CHECK_FALSE(t.contains(3));
    CHECK(StepSet::parse("-1,0").max_step() == 0);
    CHECK_THROWS_AS(StepSet::parse("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(StepSet::parse("-2,-1,1"), std::invalid_argument);
    CHECK_THROWS_AS(StepSet::parse("-1"), std::invalid_argument);
    CHECK_THROWS_AS(StepSet::parse("-1,a"), std::invalid_argument);
    CHECK_THROWS_AS(StepSet::parse(""), std::invalid_argument);
}

TEST_CASE("weights") {
    const StepSet t = StepSet::parse("-1,0,1,2");
    const Weights w = Weights::parse(t, "1=2,0=1/2");
    CHECK(w.at(1) == 2);
    CHECK(w.at(0) == make_rational(1, 2));
    CHECK(w.at(2) == 1);
    CHECK(w.to_string() == "0=1/2,1=2");
    CHECK_FALSE(w.is_integral());
    CHECK_FALSE(w.is_uniform());
    CHECK(Weights(t).to_string() == "all-1");
    CHECK(Weights::parse(t, "").is_uniform());

    Weights v(t);
    CHECK_THROWS_AS(v.set(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(v.set(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(v.set(5, 1), std::invalid_argument);
    CHECK_NOTHROW(v.set(2, 1));
    CHECK_THROWS_AS(Weights::parse(t, "1:2"), std::invalid_argument);
}

TEST_CASE("path types") {
    const UnitPath u = UnitPath::parse("RRU");
    CHECK(u.end() == Point{2, 1});
    CHECK(u.to_string() == "RRU");
    CHECK(UnitPath::parse("").steps.empty());
    try {
        (void)UnitPath::parse("RUX");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("index 2") != std::string::npos);
    }

    const RisePath r = RisePath::parse("2,-1,-1");
    CHECK(r.end() == Point{3, 0});
    CHECK(r.to_string() == "2,-1,-1");
    CHECK(RisePath::parse("").rises.empty());
}

TEST_CASE("rise path enumeration") {
    const StepSet dyck({-1, 1});
    for (int n = 0; n <= 8; ++n) {
        CHECK(oracle::enumerate_rise_paths(dyck, 2 * n, 0, 0, true).size() ==
              static_cast<std::size_t>(fixtures::catalan[static_cast<std::size_t>(n)]));
    }
    const StepSet motzkin({-1, 0, 1});
    for (int n = 0; n <= 10; ++n) {
        CHECK(oracle::enumerate_rise_paths(motzkin, n, 0, 0, true).size() ==
              static_cast<std::size_t>(fixtures::motzkin[static_cast<std::size_t>(n)]));
    }
    const StepSet ternary({-1, 2});
    for (int n = 0; n <= 5; ++n) {
        CHECK(oracle::enumerate_rise_paths(ternary, 3 * n, 0, 0, true).size() ==
              static_cast<std::size_t>(fixtures::ternary[static_cast<std::size_t>(n)]));
    }

    // From height 1 with T = {-1,1,2} to (6,0).
    const auto paths = oracle::enumerate_rise_paths(StepSet({-1, 1, 2}), 6, 0, 1, true);
    CHECK(paths.size() == 12);
    CHECK(std::is_sorted(paths.begin(), paths.end(),
                         [](const RisePath& a, const RisePath& b) { return a.rises < b.rises; }));
    for (const auto& p : paths) {
        CHECK(p.start == Point{0, 1});
        CHECK(p.end() == Point{6, 0});
    }

    // Without the floor, every rise sequence with the right sum counts.
    CHECK(oracle::enumerate_rise_paths(dyck, 4, 0, 0, false).size() == 6);
    CHECK(oracle::enumerate_rise_paths(dyck, 3, 0, 0, true).empty());
}

TEST_CASE("weighted tables agree with per-path weights") {
    const StepSet t = StepSet::parse("-1,0,1,2");
    const Weights w = Weights::parse(t, "0=1/2,1=3");
    const auto table = oracle::rise_weight_table(t, w, 1, 6, true);
    for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 2 * m + 1; ++n) {
            Rational sum;
            for (const auto& p : oracle::enumerate_rise_paths(t, m, n, 1, true)) {
                sum += oracle::weight_of(p, w);
            }
            const auto it = table.find({m, n});
            CHECK((it == table.end() ? Rational(0) : it->second) == sum);
        }
    }
}

TEST_CASE("enumeration cap") {
    const StepSet t = StepSet::parse("-1,0,1,2");
    try {
        (void)oracle::enumerate_rise_paths(t, 12, 0, 0, true, 1000);
        FAIL("expected the cap to trigger");
    } catch (const std::length_error& e) {
        CHECK(std::string(e.what()).find("LATPATH_ENUM_CAP") != std::string::npos);
    }
    CHECK_THROWS_AS(oracle::count_unit_paths({0, 0}, {10, 10}, oracle::strictly_below_diagonal(), 100),
                    std::length_error);
}

TEST_CASE("unit path enumeration") {
    // Ballot numbers (m-n)/(m+n) binom(m+n,m) from (1,0) below y = x.
    for (int m = 1; m <= 7; ++m) {
        for (int n = 0; n < m; ++n) {
            Rational expected(binomial(m + n, m) * (m - n));
            expected /= m + n;
            const auto paths = oracle::enumerate_unit_paths({1, 0}, {m, n}, oracle::strictly_below_diagonal());
            CHECK(Rational(static_cast<long>(paths.size())) == expected);
            CHECK(oracle::count_unit_paths({1, 0}, {m, n}, oracle::strictly_below_diagonal()) == paths.size());
        }
    }
    const auto all = oracle::enumerate_unit_paths({0, 0}, {2, 1}, [](Point) { return true; });
    REQUIRE(all.size() == 3);
    CHECK(all[0].to_string() == "RRU");
    CHECK(all[2].to_string() == "URR");
    CHECK(oracle::enumerate_unit_paths({2, 0}, {1, 3}, [](Point) { return true; }).empty());
    CHECK(oracle::enumerate_unit_paths({0, 0}, {2, 2}, oracle::strictly_below_diagonal()).empty());
}

TEST_CASE("boundary predicates") {
    CHECK(oracle::never_touches_x_eq_py(2)({3, 1}));
    CHECK_FALSE(oracle::never_touches_x_eq_py(2)({2, 1}));
    CHECK(oracle::never_crosses_x_eq_py(2)({2, 1}));
    CHECK_FALSE(oracle::never_crosses_x_eq_py(2)({1, 1}));
    CHECK(oracle::never_crosses_y_eq_px(2, 1)({1, 3}));
    CHECK_FALSE(oracle::never_crosses_y_eq_px(2, 1)({1, 4}));
}

TEST_CASE("restricted Dyck paths") {
    CHECK(oracle::enumerate_restricted_dyck(0, 0).size() == 1);
    CHECK(oracle::enumerate_restricted_dyck(8, 2).size() == 10);
    CHECK(oracle::enumerate_restricted_dyck(12, 0).size() == 104);
    // The fourth consecutive up step is what is excluded: UUUUDDDD is out.
    for (const auto& p : oracle::enumerate_restricted_dyck(8, 0)) {
        int run = 0;
        int longest = 0;
        for (int r : p.rises) {
            run = r == 1 ? run + 1 : 0;
            longest = std::max(longest, run);
        }
        CHECK(longest < 4);
        CHECK(p.rises.back() == -1);
    }
}
