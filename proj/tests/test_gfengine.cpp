#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"
#include "latpath/dp.hpp"
#include "latpath/gfengine.hpp"

using namespace latpath;

namespace {

std::vector<Rational> ints(std::vector<long> v) {
    std::vector<Rational> out;
    for (long x : v) {
        out.emplace_back(x);
    }
    return out;
}

std::vector<Rational> head(const Series& s, std::size_t n) {
    return {s.coefficients().begin(), s.coefficients().begin() + static_cast<long>(n)};
}

Rational signed_catalan(std::size_t n) {
    Rational c(fixtures::catalan[n]);
    return n % 2 == 0 ? c : Rational(-c);
}

}  // namespace

TEST_CASE("catalan_gf") {
    const Series c = gf::catalan_gf(19);
    REQUIRE(c.order() == 19);
    for (std::size_t n = 0; n < 20; ++n) {
        CHECK(c[n] == fixtures::catalan[n]);
    }
}

TEST_CASE("eq204 coefficients") {
    CHECK(gf::eq204_coefficient(4, 2) == 5);
    CHECK(gf::eq204_coefficient(0, 0) == 1);
    CHECK(gf::eq204_coefficient(3, 3) == 0);
    CHECK(gf::eq204_coefficient(2, 3) == 0);
}

TEST_CASE("rational generating function of C'_p") {
    CHECK(gf::ballot_rgf(6).at(5, 3) == 14);
    CHECK(gf::ballot_rgf(6).at(2, 2) == 0);
    CHECK(gf::c_p_rgf(2, 4).at(0, 1) == -2);
    for (int p = 1; p <= 3; ++p) {
        const Grid a = gf::c_p_rgf(p, 9);
        const Grid b = dp::c_p_extended(p, 9);
        b.for_each([&](int m, int n, const Rational& v) { CHECK(a.at(m, n) == v); });
    }
    CHECK(gf::c_p_closed_form(2, 7, 3) == 12);
    CHECK_THROWS_AS(gf::c_p_closed_form(2, 0, 0), std::invalid_argument);
}

TEST_CASE("solve_f") {
    const StepSet dyck({-1, 1});
    CHECK(head(gf::solve_f(dyck, Weights(dyck), 6), 7) == ints({1, 0, 1, 0, 2, 0, 5}));
    const StepSet tern({-1, 2});
    CHECK(head(gf::solve_f(tern, Weights(tern), 9), 10) == ints({1, 0, 0, 1, 0, 0, 3, 0, 0, 12}));
    const StepSet t = StepSet::parse("-1,0,1,2");
    const Series f = gf::solve_f(t, Weights(t), 12);
    CHECK(head(f, 7) == ints({1, 1, 2, 5, 13, 36, 104}));
    CHECK(gf::f_residual(t, Weights(t), f).is_zero());
    CHECK_FALSE(gf::f_residual(t, Weights(t), Series::constant(1, 5)).is_zero());
}

TEST_CASE("solve_g") {
    const StepSet t = StepSet::parse("-1,0,1,2");
    const Series g = gf::solve_g(t, Weights(t), 10);
    CHECK(head(g, 11) == ints({1, -1, 1, -2, 4, -7, 13, -26, 52, -104, 212}));
    CHECK(gf::g_equation_lhs(t, Weights(t), g) == Series::constant(1, 10));
    CHECK(gf::g_from_f(t, Weights(t), 10) == g);
    CHECK(gf::g_closed_form_k2(t, Weights(t), 10) == g);

    const StepSet dyck({-1, 1});
    CHECK(gf::solve_g(dyck, Weights(dyck), 8) == Series::constant(1, 8));

    const StepSet tern({-1, 2});
    const Series gt = gf::solve_g(tern, Weights(tern), 15);
    for (std::size_t n = 0; n <= 15; ++n) {
        CHECK(gt[n] == (n % 3 == 0 ? signed_catalan(n / 3) : Rational(0)));
    }

    const StepSet flat({-1, 0});
    CHECK_THROWS_AS(gf::solve_g(flat, Weights(flat), 5), std::invalid_argument);
}

TEST_CASE("gamma") {
    CHECK(gf::gamma(1, 6) == Series::variable(6));
    const Series g2 = gf::gamma(2, 12);
    CHECK(g2[0] == 0);
    for (std::size_t n = 0; n < 12; ++n) {
        CHECK(g2[n + 1] == signed_catalan(n));
    }
    const Series poly({Rational(0), Rational(1), Rational(1), Rational(1), Rational(0), Rational(0), Rational(0),
                       Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)});
    CHECK(compose(poly, gf::gamma(3, 12)) == Series::variable(12));
    CHECK_THROWS_AS(gf::gamma(0, 5), std::invalid_argument);
}

TEST_CASE("P'_h family agrees with the continued table") {
    const StepSet t = StepSet::parse("-1,1,2");
    const int K = 2;
    for (int h = 0; h <= 2; ++h) {
        const int M = 6;
        const std::size_t order = 2 * (K * M + h) + 4;
        const gf::GFFamily fam = gf::p_h_rgf(t, Weights(t), h, M, order);
        const int n_min = h - static_cast<int>(order);
        const Grid ext = dp::p_h_extended(t, Weights(t), h, M, std::min(n_min, -K - 1));
        for (int m = 0; m <= M; ++m) {
            const Series col = fam.column(m);
            for (std::size_t n = 0; n <= order; ++n) {
                CHECK(col[n] == ext.at(m, K * m + h - static_cast<int>(n)));
            }
        }
    }
    CHECK(gf::p_h_rgf(t, Weights(t), 1, 4, 12).coefficient(4, 7) == 10);
    CHECK(gf::p_h_rgf(t, Weights(t), 1, 4, 12).coefficient(0, 0) == 1);
    CHECK(gf::required_order(t, 1, 4) == 9);
    try {
        (void)gf::p_h_rgf(t, Weights(t), 1, 4, 5);
        FAIL("expected an order error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("too small") != std::string::npos);
    }
}

TEST_CASE("the NS family is the P'_0 family for T = {-1,0,1,2}") {
    const StepSet t = StepSet::parse("-1,0,1,2");
    const gf::GFFamily ns = gf::ns_family(20);
    const gf::GFFamily p0 = gf::p_h_rgf(t, Weights(t), 0, 8, 20);
    for (int m = 0; m <= 8; ++m) {
        CHECK(ns.column(m) == p0.column(m));
    }
    CHECK(ns.coefficient(3, 5) == 8);
    CHECK(ns.coefficient(4, 6) == 32);
    CHECK(ns.coefficient(0, 0) == 1);
    CHECK(ns.coefficient(2, 5) == 0);
}

TEST_CASE("gamma families against D_p and E_{p,h}") {
    CHECK(gf::d_p_rgf(2, 4, 8).coefficient(0, 3) == -2);
    for (int p = 1; p <= 3; ++p) {
        CHECK(gf::e_ph_rgf(p, 0, 5, 12).column(3) == gf::d_p_rgf(p, 5, 12).column(3));
        for (int h = 0; h <= 2; ++h) {
            const gf::GFFamily fam = gf::e_ph_rgf(p, h, 5, 30);
            const Grid e = dp::e_ph(p, h, 5);
            e.for_each([&](int m, int n, const Rational& v) {
                CHECK(fam.coefficient(m + n, static_cast<std::size_t>(n)) == v);
            });
        }
    }
    CHECK_THROWS_AS(gf::d_p_rgf(0, 4, 8), std::invalid_argument);
}

TEST_CASE("binomial identity") {
    CHECK(gf::lemma31_lhs(0) == 1);
    CHECK(gf::lemma31_lhs(4) == fixtures::catalan[4]);
    CHECK(gf::lemma31_rhs(4) == 14);
    CHECK(gf::lemma31_holds(50));
    CHECK(gf::lemma31_lhs(19) == fixtures::catalan[19]);
}

TEST_CASE("columns follow the kernel expansion") {
    // Naive x-expansion of numerator/(1 - x kernel): column m is
    // numerator times kernel^m, built here by repeated multiplication.
    const StepSet t = StepSet::parse("-1,0,1,2");
    const Weights w = Weights::parse(t, "0=1/2");
    const gf::GFFamily fam = gf::p_h_rgf(t, w, 1, 5, 14);
    Series acc = fam.numerator;
    const auto cols = fam.columns(5);
    REQUIRE(cols.size() == 6);
    for (int m = 0; m <= 5; ++m) {
        CHECK(cols[static_cast<std::size_t>(m)] == acc);
        acc = acc * fam.kernel;
    }
    CHECK(fam.kernel == gf::kernel_multiplier(t, w, 14));
    CHECK(fam.kernel[0] == 1);
    CHECK(fam.kernel[2] == make_rational(1, 2));

    const auto j = nlohmann::json::parse(fam.to_json());
    CHECK(j.contains("A0"));
    CHECK(j.contains("B"));
}
