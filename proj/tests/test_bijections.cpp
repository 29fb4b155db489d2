#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "latpath/bijections.hpp"
#include "latpath/steps.hpp"

using namespace latpath;

namespace {

std::string error_of(const RisePath& p) {
    try {
        (void)bij::dyck_encode(p);
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("reverse_swap") {
    const UnitPath image = bij::reverse_swap(UnitPath::parse("RRU"));
    CHECK(image.to_string() == "RUU");
    CHECK(image.end() == Point{1, 2});
    CHECK(bij::reverse_swap(UnitPath::parse("")).steps.empty());

    UnitPath shifted = UnitPath::parse("RURRU");
    shifted.start = {1, 0};
    CHECK(bij::reverse_swap(shifted).start == Point{0, 0});

    for (const auto& p : oracle::enumerate_unit_paths({0, 0}, {4, 3}, [](Point) { return true; })) {
        CHECK(bij::reverse_swap(bij::reverse_swap(p)) == p);
        CHECK(bij::reverse_swap(p).end() == Point{3, 4});
    }
}

TEST_CASE("reverse_swap is a bijection between endpoint classes") {
    const auto all = [](Point) { return true; };
    std::set<std::string> images;
    for (const auto& p : oracle::enumerate_unit_paths({0, 0}, {5, 3}, all)) {
        images.insert(bij::reverse_swap(p).to_string());
    }
    std::set<std::string> expected;
    for (const auto& p : oracle::enumerate_unit_paths({0, 0}, {3, 5}, all)) {
        expected.insert(p.to_string());
    }
    CHECK(images.size() == 56);
    CHECK(images == expected);
}

TEST_CASE("dyck_encode") {
    CHECK(bij::dyck_encode(RisePath::parse("1,-1")).to_string() == "0");
    CHECK(bij::dyck_encode(RisePath::parse("1,1,1,-1,-1,-1")).to_string() == "2,-1,-1");
    CHECK(bij::dyck_encode(RisePath::parse("")).rises.empty());
    CHECK_THROWS_AS(bij::dyck_encode(RisePath::parse("-1")), std::invalid_argument);

    CHECK(error_of(RisePath::parse("1,1,1,1,-1,-1,-1,-1")).find("step 3") != std::string::npos);
    CHECK(error_of(RisePath::parse("1,-1,-1,1")).find("step 2") != std::string::npos);
    CHECK(error_of(RisePath::parse("2,-1,-1")).find("step 0") != std::string::npos);
    CHECK_FALSE(error_of(RisePath::parse("1,-1,1")).empty());

    RisePath lifted = RisePath::parse("1,-1");
    lifted.start = {0, 1};
    CHECK_THROWS_AS(bij::dyck_encode(lifted), std::invalid_argument);
}

TEST_CASE("dyck_decode") {
    CHECK(bij::dyck_decode(RisePath::parse("2,-1,-1")).to_string() == "1,1,1,-1,-1,-1");
    CHECK(bij::dyck_decode(RisePath::parse("0")).to_string() == "1,-1");
    CHECK_THROWS_AS(bij::dyck_decode(RisePath::parse("3,-1,-1,-1")), std::invalid_argument);
    CHECK_THROWS_AS(bij::dyck_decode(RisePath::parse("-1")), std::invalid_argument);
}

TEST_CASE("encode and decode are inverse bijections") {
    const StepSet t = StepSet::parse("-1,0,1,2");
    std::set<std::string> images;
    const auto dyck = oracle::enumerate_restricted_dyck(8, 2);
    CHECK(dyck.size() == 10);
    for (const auto& p : dyck) {
        const RisePath e = bij::dyck_encode(p);
        CHECK(bij::dyck_decode(e) == p);
        images.insert(e.to_string());
    }
    // Three down steps give three groups ending at the same height 2.
    std::set<std::string> expected;
    for (const auto& q : oracle::enumerate_rise_paths(t, 3, 2, 0, true)) {
        expected.insert(q.to_string());
    }
    CHECK(images.size() == dyck.size());
    CHECK(images == expected);

    for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 2 * m; ++n) {
            for (const auto& q : oracle::enumerate_rise_paths(t, m, n, 0, true)) {
                CHECK(bij::dyck_encode(bij::dyck_decode(q)) == q);
            }
        }
    }
}
