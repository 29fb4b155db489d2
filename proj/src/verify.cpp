#include "latpath/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "latpath/bijections.hpp"
#include "latpath/dp.hpp"
#include "latpath/gfengine.hpp"
#include "latpath/grid.hpp"
#include "latpath/series.hpp"

namespace latpath::verify {

namespace {

constexpr std::size_t kMaxFailureLines = 20;

std::string cell(const std::string& what, long m, long n, const Rational& got, const Rational& want) {
    std::ostringstream out;
    out << what << " at (" << m << "," << n << "): got " << to_string(got) << ", expected " << to_string(want);
    return out.str();
}

void expect_cell(Report& r, const std::string& what, long m, long n, const Rational& got, const Rational& want) {
    r.check(got == want, [&] { return cell(what, m, n, got, want); });
}

void expect_series(Report& r, const std::string& what, const Series& got, const Series& want) {
    r.check(got == want, [&] { return what + ": " + got.to_string() + " != " + want.to_string(); });
}

Rational signed_catalan(int n) {
    Rational c(binomial(2L * n, n));
    c /= n + 1;
    return n % 2 == 0 ? c : Rational(-c);
}

Series monomial_power(std::size_t k, std::size_t order) { return Series::monomial(1, k, order); }

}  // namespace

Report::Report(std::string name) : name_(std::move(name)) {}

void Report::note(std::string line) { lines_.push_back(std::move(line)); }

void Report::fail(std::string what) {
    if (failures_ == 0) {
        first_failure_ = what;
    }
    ++failures_;
    if (failures_ <= kMaxFailureLines) {
        lines_.push_back("  failed: " + std::move(what));
    }
}

void Report::absorb(const Report& other) {
    checks_ += other.checks_;
    for (const auto& line : other.lines_) {
        lines_.push_back(line);
    }
    if (other.failures_ > 0 && failures_ == 0) {
        first_failure_ = other.first_failure_;
    }
    failures_ += other.failures_;
}

std::string Report::text() const {
    std::ostringstream out;
    for (const auto& line : lines_) {
        out << line << '\n';
    }
    if (passed()) {
        out << "PASS " << name_ << " (" << checks_ << " checks)\n";
    } else {
        out << "FAIL " << name_ << " (" << failures_ << " of " << checks_ << " checks failed; first: "
            << first_failure_ << ")\n";
    }
    return out.str();
}

std::string Case::label() const {
    return "T=" + steps.to_string() + " w=" + weights.to_string() + " h=" + std::to_string(h);
}

std::vector<Case> theorem_fixtures() {
    const std::vector<std::string> sets{"-1,1", "-1,2", "-1,1,2", "-1,0,1,2", "-1,0,3", "-1,2,4"};
    const std::vector<std::vector<std::pair<int, Rational>>> variants{
        {},
        {{1, 2}},
        {{0, make_rational(1, 2)}},
        {{0, make_rational(1, 2)}, {1, 2}},
        {{2, 3}},
    };
    std::vector<Case> out;
    for (const auto& text : sets) {
        const StepSet steps = StepSet::parse(text);
        for (const auto& variant : variants) {
            Weights w(steps);
            bool applicable = true;
            for (const auto& [step, value] : variant) {
                if (!steps.contains(step) || step == -1 || step == steps.max_step()) {
                    applicable = false;
                    break;
                }
                w.set(step, value);
            }
            if (!applicable) {
                continue;
            }
            for (int h = 0; h <= 2; ++h) {
                out.push_back({steps, w, h});
            }
        }
    }
    return out;
}

Report ns(int M) {
    Report r("ns");
    const auto fam = gf::ns_family(static_cast<std::size_t>(2 * M));
    const auto cols = fam.columns(M);
    const Grid s = dp::s_count(4 * M, 2 * M);
    for (int m = 0; m <= M; ++m) {
        for (int n = 0; n <= 2 * m; ++n) {
            expect_cell(r, "S'(m,n) vs S(4m-n,2m-n)", m, n, cols[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)],
                        s.at(4 * m - n, 2 * m - n));
        }
    }
    // The same family arises from the step-set theorem with T = {-1,0,1,2}.
    const StepSet steps = StepSet::parse("-1,0,1,2");
    const auto general = gf::p_h_rgf(steps, Weights(steps), 0, M, static_cast<std::size_t>(2 * M));
    expect_series(r, "numerator vs T={-1,0,1,2} family", fam.numerator, general.numerator);
    expect_series(r, "kernel vs T={-1,0,1,2} family", fam.kernel, general.kernel);
    r.note("S'(m,n) = S(4m-n,2m-n) for 0 <= n <= 2m, m <= " + std::to_string(M));
    return r;
}

Report thm51(const std::vector<Case>& cases, int M, std::size_t consistency_order) {
    Report r("thm51");
    for (const auto& c : cases) {
        Report part(c.label());
        const StepSet& T = c.steps;
        const Weights& w = c.weights;
        const int K = T.max_step();
        const int h = c.h;

        const Series g = gf::solve_g(T, w, consistency_order);
        expect_series(part, c.label() + " g equation", gf::g_equation_lhs(T, w, g),
                      Series::constant(1, consistency_order));
        const Series f = gf::solve_f(T, w, consistency_order);
        part.check(gf::f_residual(T, w, f).is_zero(), [&] { return c.label() + " f equation residual"; });
        expect_series(part, c.label() + " g vs (1/B) f(t^K/B)", gf::g_from_f(T, w, consistency_order), g);
        if (K == 2) {
            expect_series(part, c.label() + " g vs quadratic formula", gf::g_closed_form_k2(T, w, consistency_order), g);
        }
        if (w.is_integral()) {
            part.check(g.is_integral(), [&] { return c.label() + " g has a non-integer coefficient"; });
        }

        // Combinatorial region.
        const Grid table = dp::p_h(T, w, h, M);
        const auto fam = gf::p_h_rgf(T, w, h, M, gf::required_order(T, h, M));
        const auto cols = fam.columns(M);
        for (int m = 0; m <= M; ++m) {
            const auto& col = cols[static_cast<std::size_t>(m)];
            for (int n = 0; n <= K * m + h; ++n) {
                expect_cell(part, c.label() + " rgf vs P_h", m, K * m + h - n, col[static_cast<std::size_t>(n)],
                            table.at(m, K * m + h - n));
            }
            if (w.is_integral()) {
                part.check(col.is_integral(), [&] { return c.label() + " non-integer coefficient in column " + std::to_string(m); });
            }
        }

        // Redundant region: rows below zero against the continued table.
        const int Mr = std::min(M, 6);
        const int depth = 2 * K + 2;
        const auto deep_order = static_cast<std::size_t>(K * Mr + h + depth);
        const auto deep_cols = gf::p_h_rgf(T, w, h, Mr, deep_order).columns(Mr);
        const Grid ext = dp::p_h_extended(T, w, h, Mr, -K * Mr - depth);
        for (int m = 0; m <= Mr; ++m) {
            for (std::size_t n = 0; n <= deep_order; ++n) {
                const int row = K * m + h - static_cast<int>(n);
                expect_cell(part, c.label() + " rgf vs P'_h", m, row, deep_cols[static_cast<std::size_t>(m)][n],
                            ext.at(m, row));
            }
        }

        // First column: sum_m P_h(m,0) x^m = x^h f^(h+1).
        const Series fm = gf::solve_f(T, w, static_cast<std::size_t>(M));
        const Series first = shift(pow(fm, static_cast<std::size_t>(h + 1)), static_cast<std::size_t>(h));
        for (int m = 0; m <= M; ++m) {
            expect_cell(part, c.label() + " x^h f^(h+1) vs P_h(m,0)", m, 0, first[static_cast<std::size_t>(m)],
                        table.at(m, 0));
        }
        r.note(c.label() + ": " + std::to_string(part.checks()) + " checks" + (part.passed() ? "" : ", FAILED"));
        r.absorb(part);
    }
    return r;
}

Report lemma53(const std::vector<Case>& cases, int M) {
    Report r("lemma53");
    for (const auto& c : cases) {
        const int K = c.steps.max_step();
        const Grid ext = dp::p_h_extended(c.steps, c.weights, c.h, M, -K - 1, 0);
        const auto order = static_cast<std::size_t>(K * M + c.h + K + 1);
        const auto cols = gf::p_h_rgf(c.steps, c.weights, c.h, M, order).columns(M);
        for (int m = 0; m <= M; ++m) {
            expect_cell(r, c.label() + " P'_h(m,-K-1) vs -P'_h(m,0)", m, -K - 1, ext.at(m, -K - 1), -ext.at(m, 0));
            const auto n = static_cast<std::size_t>(K * m + c.h + K + 1);
            expect_cell(r, c.label() + " rgf at row -K-1", m, -K - 1, cols[static_cast<std::size_t>(m)][n],
                        -ext.at(m, 0));
            for (int row = -K; row <= -1; ++row) {
                expect_cell(r, c.label() + " zero row", m, row, ext.at(m, row), 0);
            }
        }
    }
    r.note(std::to_string(cases.size()) + " cases, m <= " + std::to_string(M));
    return r;
}

Report lemma31(int n_max) {
    Report r("lemma31");
    for (int n = 0; n <= n_max; ++n) {
        const Rational lhs = gf::lemma31_lhs(n);
        const Rational rhs = gf::lemma31_rhs(n);
        r.check(lhs == rhs, [&] { return "n=" + std::to_string(n) + ": " + to_string(lhs) + " != " + to_string(rhs); });
    }
    r.note("sum_i binom(n+i,3i) binom(3i,i)/(2i+1) = C_n for n <= " + std::to_string(n_max));
    return r;
}

Report eq204(int M) {
    Report r("eq204");
    const Grid b = dp::ballot(std::max(M, 1));
    for (int m = 0; m <= M; ++m) {
        for (int n = 0; n <= M; ++n) {
            const Rational want = b.at(m, n) + (m == 0 && n == 0 ? 1 : 0);
            expect_cell(r, "[x^m y^n] 1/(1-x c(xy)) vs 1 + B", m, n, gf::eq204_coefficient(m, n), want);
        }
    }
    const Series c = gf::catalan_gf(static_cast<std::size_t>(2 * M));
    for (int n = 0; n <= 2 * M; ++n) {
        expect_cell(r, "c(x) coefficient", n, 0, c[static_cast<std::size_t>(n)], Rational(catalan_number(n)));
    }
    return r;
}

Report rgf(int M, int diagonal) {
    Report r("rgf");
    for (int p = 1; p <= 3; ++p) {
        const std::string tag = "p=" + std::to_string(p);
        const Grid expansion = gf::c_p_rgf(p, diagonal);
        const Grid recurrence = dp::c_p_extended(p, diagonal);
        const Grid counted = dp::c_p(p, diagonal);
        for (int m = 0; m <= diagonal; ++m) {
            for (int n = 0; m + n <= diagonal; ++n) {
                const Rational& v = expansion.at(m, n);
                expect_cell(r, tag + " (x-py)/(1-x-y) vs C'_p", m, n, v, recurrence.at(m, n));
                if (m + n > 0) {
                    expect_cell(r, tag + " closed form", m, n, v, gf::c_p_closed_form(p, m, n));
                }
                if (counted.contains(m, n)) {
                    expect_cell(r, tag + " C'_p vs C_p", m, n, v, counted.at(m, n));
                }
            }
        }
    }

    for (int p = 1; p <= 3; ++p) {
        const auto order = static_cast<std::size_t>(p * M + 2 + p);
        const int width = (p + 1) * M + 2 + p;
        for (int h = 0; h <= 2; ++h) {
            const std::string tag = "p=" + std::to_string(p) + " h=" + std::to_string(h);
            const auto fam = gf::e_ph_rgf(p, h, width, order);
            const auto cols = fam.columns(width);
            const Grid e = dp::e_ph(p, h, M);
            e.for_each([&](int a, int n, const Rational& v) {
                expect_cell(r, tag + " E'_{p,h} vs E_{p,h}", a, n,
                            cols[static_cast<std::size_t>(a + n)][static_cast<std::size_t>(n)], v);
            });
            if (h == 0) {
                const auto d_fam = gf::d_p_rgf(p, width, order);
                expect_series(r, tag + " h=0 reduction numerator", fam.numerator, d_fam.numerator);
                expect_series(r, tag + " h=0 reduction kernel", fam.kernel, d_fam.kernel);
                const auto d_cols = d_fam.columns(width);
                dp::d_p(p, M).for_each([&](int a, int n, const Rational& v) {
                    expect_cell(r, tag + " D'_p vs D_p", a, n,
                                d_cols[static_cast<std::size_t>(a + n)][static_cast<std::size_t>(n)], v);
                });
            }
        }
    }

    // 1 - gamma for p = 2 is 1 + sum (-1)^(n+1) C_n t^(n+1).
    const auto order = static_cast<std::size_t>(diagonal);
    const Series numerator = gf::d_p_rgf(2, 0, order).numerator;
    expect_cell(r, "D'_2 numerator", 0, 0, numerator[0], 1);
    for (int n = 0; n + 1 <= diagonal; ++n) {
        expect_cell(r, "D'_2 numerator", 0, n + 1, numerator[static_cast<std::size_t>(n + 1)], -signed_catalan(n));
    }

    // gamma(t^(p+1)) = g(t) t^(p+1) for T = {-1,p}.
    for (int p = 1; p <= 3; ++p) {
        const StepSet steps({-1, p});
        const Series g = gf::solve_g(steps, Weights(steps), order);
        const Series gam = gf::gamma(p, order);
        const auto k = static_cast<std::size_t>(p + 1);
        expect_series(r, "gamma(t^(p+1)) vs g t^(p+1), p=" + std::to_string(p), compose(gam, monomial_power(k, order)),
                      shift(g, k).truncated(order));
        r.check(gam.is_integral(), [&] { return "gamma has a non-integer coefficient, p=" + std::to_string(p); });
        Series poly(order);
        for (int j = 1; j <= p; ++j) {
            poly = poly + monomial_power(static_cast<std::size_t>(j), order);
        }
        expect_series(r, "compose(t+...+t^p, gamma) = t, p=" + std::to_string(p), compose(poly, gam),
                      Series::variable(order));
    }
    const StepSet ballot_steps({-1, 1});
    expect_series(r, "g for T={-1,1}", gf::solve_g(ballot_steps, Weights(ballot_steps), order), Series::constant(1, order));
    return r;
}

Report bijection(int unit_length, int dyck_length, int rise_length, int image_n) {
    Report r("bijection");

    for (int len = 0; len <= unit_length; ++len) {
        for (unsigned bits = 0; bits < (1U << len); ++bits) {
            UnitPath path;
            for (int i = 0; i < len; ++i) {
                path.steps.push_back((bits >> i) & 1U ? UnitStep::Up : UnitStep::Right);
            }
            const UnitPath image = bij::reverse_swap(path);
            r.check(bij::reverse_swap(image) == path, [&] { return "reverse_swap not an involution on " + path.to_string(); });
            const Point a = path.end();
            const Point b = image.end();
            r.check(b.x == a.y && b.y == a.x, [&] { return "reverse_swap endpoint of " + path.to_string(); });
        }
    }

    for (int p = 2; p <= 3; ++p) {
        const Grid d = dp::d_p(p, image_n);
        const Grid c = dp::c_p(p, p * image_n + 1);
        for (int n = 0; n <= image_n; ++n) {
            const auto source = oracle::enumerate_unit_paths({0, 0}, {p * n, n}, oracle::never_crosses_x_eq_py(p));
            auto target = oracle::enumerate_unit_paths({0, 0}, {n, p * n}, oracle::never_crosses_y_eq_px(p));
            std::vector<UnitPath> images;
            for (const auto& path : source) {
                images.push_back(bij::reverse_swap(path));
            }
            std::sort(images.begin(), images.end());
            std::sort(target.begin(), target.end());
            const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
            r.check(images == target, [&] { return tag + ": reverse_swap image differs from the target family"; });
            const Rational count(static_cast<long>(target.size()));
            expect_cell(r, tag + " image count vs D_p(n,pn)", n, p * n, count, d.at(n, p * n));
            expect_cell(r, tag + " image count vs C_p(pn+1,n)", p * n + 1, n, count, c.at(p * n + 1, n));
        }
    }

    // Every +-1 sequence up to dyck_length: valid ones round-trip, the rest are rejected.
    for (int len = 0; len <= dyck_length; ++len) {
        for (unsigned bits = 0; bits < (1U << len); ++bits) {
            RisePath path;
            long height = 0;
            bool floor_ok = true;
            int run = 0;
            bool runs_ok = true;
            for (int i = 0; i < len; ++i) {
                const int rise = (bits >> i) & 1U ? 1 : -1;
                path.rises.push_back(rise);
                height += rise;
                floor_ok = floor_ok && height >= 0;
                run = rise == 1 ? run + 1 : 0;
                runs_ok = runs_ok && run < 4;
            }
            if (!floor_ok) {
                continue;
            }
            const bool valid = runs_ok && (len == 0 || path.rises.back() == -1);
            if (!valid) {
                bool threw = false;
                try {
                    (void)bij::dyck_encode(path);
                } catch (const std::invalid_argument&) {
                    threw = true;
                }
                r.check(threw, [&] { return "dyck_encode accepted " + path.to_string(); });
                continue;
            }
            const RisePath code = bij::dyck_encode(path);
            r.check(bij::dyck_decode(code) == path, [&] { return "dyck round trip failed on " + path.to_string(); });
            const Point e = path.end();
            const Point f = code.end();
            r.check(e.x == 2 * f.x + f.y && e.y == f.y, [&] { return "dyck endpoint of " + path.to_string(); });
        }
    }

    for (int len = 0; len <= rise_length; ++len) {
        long total = 1;
        for (int i = 0; i < len; ++i) {
            total *= 4;
        }
        for (long code = 0; code < total; ++code) {
            RisePath path;
            long height = 0;
            bool floor_ok = true;
            long rest = code;
            for (int i = 0; i < len; ++i) {
                const int rise = static_cast<int>(rest % 4) - 1;
                rest /= 4;
                path.rises.push_back(rise);
                height += rise;
                floor_ok = floor_ok && height >= 0;
            }
            if (floor_ok) {
                r.check(bij::dyck_encode(bij::dyck_decode(path)) == path,
                        [&] { return "dyck_encode(dyck_decode) failed on " + path.to_string(); });
            }
        }
    }

    // Encodable paths to (2m+n, n) are counted by P_0(m,n) with T = {-1,0,1,2}.
    const StepSet steps = StepSet::parse("-1,0,1,2");
    const Grid p0 = dp::p_h(steps, Weights(steps), 0, 5);
    const Grid s = dp::s_count(16, 10);
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= 2 * m && 2 * m + n <= 16; ++n) {
            const Rational count(static_cast<long>(oracle::enumerate_restricted_dyck(2 * m + n, n).size()));
            expect_cell(r, "encodable paths to (2m+n,n) vs P_0(m,n)", m, n, count, p0.at(m, n));
            expect_cell(r, "encodable paths vs S", 2 * m + n, n, count, s.at(2 * m + n, n));
        }
    }
    return r;
}

Report catalan_line(int N) {
    Report r("catalan-line");
    const Grid d = dp::d2_extended(N + 1, 4);
    const auto order = static_cast<std::size_t>(N + 1);
    const auto fam = gf::d_p_rgf(2, N + 5, order);
    const auto cols = fam.columns(N + 5);
    for (int n = 0; n <= N; ++n) {
        const Rational want = -signed_catalan(n);
        expect_cell(r, "D_2(-n-1,n+1) vs (-1)^(n+1) C_n", -n - 1, n + 1, d.at(-n - 1, n + 1), want);
        expect_cell(r, "D'_2(-n-1,n+1) vs (-1)^(n+1) C_n", -n - 1, n + 1, fam.numerator[static_cast<std::size_t>(n + 1)],
                    want);
    }
    // The generating function and the leftward extension agree everywhere.
    d.for_each([&](int a, int n, const Rational& v) {
        expect_cell(r, "D'_2 vs extended D_2", a, n, cols[static_cast<std::size_t>(a + n)][static_cast<std::size_t>(n)], v);
    });
    // D_2(m,n) = P'_0(m+n, 2m-n) with T = {-1,2}.
    const int rows = std::min(N + 1, 12);
    const int right = 4;
    const StepSet steps({-1, 2});
    const Grid p = dp::p_h_extended(steps, Weights(steps), 0, rows + right, -3 * rows);
    const Grid window = dp::d2_extended(rows, right);
    window.for_each([&](int m, int n, const Rational& v) {
        expect_cell(r, "D_2(m,n) vs P'_0(m+n,2m-n)", m, n, v, p.at(m + n, 2 * m - n));
    });
    r.note("D_2(-n-1,n+1) = (-1)^(n+1) C_n for n <= " + std::to_string(N));
    return r;
}

Report motzkin_line(int N) {
    Report r("motzkin-line");
    std::vector<Integer> motzkin{1};
    for (int n = 0; n < N; ++n) {
        Integer next = motzkin[static_cast<std::size_t>(n)];
        for (int k = 0; k + 1 <= n; ++k) {
            next += motzkin[static_cast<std::size_t>(k)] * motzkin[static_cast<std::size_t>(n - 1 - k)];
        }
        motzkin.push_back(next);
    }
    const Grid d = dp::d2_extended(N + 2, 0);
    const auto cols = gf::d_p_rgf(2, N, static_cast<std::size_t>(N + 2)).columns(N);
    for (int n = 0; n <= N; ++n) {
        Rational want(motzkin[static_cast<std::size_t>(n)]);
        if (n % 2 == 1) {
            want = -want;
        }
        expect_cell(r, "D_2(-2,n+2) vs (-1)^n M_n", -2, n + 2, d.at(-2, n + 2), want);
        expect_cell(r, "D'_2(-2,n+2) vs (-1)^n M_n", -2, n + 2, cols[static_cast<std::size_t>(n)][static_cast<std::size_t>(n + 2)],
                    want);
    }
    r.note("D_2(-2,n+2) = (-1)^n M_n for n <= " + std::to_string(N));
    return r;
}

Report oracle_compare(int unit_max, int rise_max, std::uint64_t cap) {
    Report r("oracle-compare");
    auto compare_unit = [&](const std::string& tag, const Grid& grid, Point from, const oracle::PointPredicate& allowed) {
        grid.for_each([&](int m, int n, const Rational& v) {
            const auto count = oracle::count_unit_paths(from, {m, n}, allowed, cap);
            expect_cell(r, tag + " oracle vs dp", m, n, Rational(static_cast<unsigned long>(count)), v);
        });
    };
    compare_unit("ballot", dp::ballot(unit_max), {1, 0}, oracle::strictly_below_diagonal());
    for (int p = 1; p <= 3; ++p) {
        compare_unit("C_" + std::to_string(p), dp::c_p(p, unit_max), {1, 0}, oracle::never_touches_x_eq_py(p));
    }
    for (int p = 1; p <= 2; ++p) {
        compare_unit("D_" + std::to_string(p), dp::d_p(p, unit_max), {0, 0}, oracle::never_crosses_y_eq_px(p));
        for (int h = 1; h <= 2; ++h) {
            compare_unit("E_" + std::to_string(p) + "," + std::to_string(h), dp::e_ph(p, h, unit_max), {0, 0},
                         oracle::never_crosses_y_eq_px(p, h));
        }
    }
    dp::s_count(unit_max).for_each([&](int m, int n, const Rational& v) {
        const Rational count(static_cast<unsigned long>(oracle::enumerate_restricted_dyck(m, n, cap).size()));
        expect_cell(r, "S oracle vs dp", m, n, count, v);
    });
    r.note("unit-step families checked for m <= " + std::to_string(unit_max));

    // Rise paths: all-1 plus the first weighted variant of each step set.
    std::vector<Case> cases;
    for (const auto& c : theorem_fixtures()) {
        const bool seen = std::any_of(cases.begin(), cases.end(), [&](const Case& d) {
            return d.steps == c.steps && d.h == c.h && d.weights.is_uniform() == c.weights.is_uniform();
        });
        if (!seen) {
            cases.push_back(c);
        }
    }
    for (const auto& c : cases) {
        const auto table = oracle::rise_weight_table(c.steps, c.weights, c.h, rise_max, true, cap);
        const Grid grid = dp::p_h(c.steps, c.weights, c.h, rise_max);
        grid.for_each([&](int m, int n, const Rational& v) {
            const auto it = table.find({m, n});
            const Rational got = it == table.end() ? Rational(0) : it->second;
            expect_cell(r, c.label() + " oracle vs P_h", m, n, got, v);
        });
        for (const auto& [key, value] : table) {
            r.check(grid.contains(key.first, key.second), [&] {
                return c.label() + " oracle reached (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                       ") outside the dp grid";
            });
        }
    }
    r.note("rise-path families checked for m <= " + std::to_string(rise_max) + " over " + std::to_string(cases.size()) +
           " (T, w, h) cases");
    return r;
}

}  // namespace latpath::verify
