#include "latpath/gfengine.hpp"

#include <stdexcept>

#include <json.hpp>

namespace latpath::gf {

namespace {

// sum of c_k t^k from a coefficient list.
Series polynomial(std::initializer_list<Rational> coeffs, std::size_t order) {
    Series s(order);
    std::size_t d = 0;
    for (const auto& c : coeffs) {
        s = s + Series::monomial(c, d++, order);
    }
    return s;
}

void require_positive_k(const StepSet& steps, const char* who) {
    if (steps.max_step() < 1) {
        throw std::invalid_argument(std::string(who) + ": step sets with K = 0 are not supported (the g equation is empty)");
    }
}

}  // namespace

Series GFFamily::column(int m) const { return numerator * pow(kernel, static_cast<std::size_t>(m)); }

std::vector<Series> GFFamily::columns(int M) const {
    std::vector<Series> out;
    Series col = numerator;
    for (int m = 0; m <= M; ++m) {
        out.push_back(col);
        col = col * kernel;
    }
    return out;
}

std::string GFFamily::to_json() const {
    nlohmann::json j;
    j["A0"] = nlohmann::json::parse(latpath::to_json(numerator));
    j["B"] = nlohmann::json::parse(latpath::to_json(kernel));
    return j.dump();
}

Series catalan_gf(std::size_t order) {
    const Series root = sqrt_unit(polynomial({1, -4}, order + 1));
    return scale(shift_down(Series::constant(1, order + 1) - root, 1), make_rational(1, 2));
}

Rational eq204_coefficient(int m, int n) {
    if (m < 0 || n < 0 || m < n) {
        return 0;
    }
    const Series c = catalan_gf(static_cast<std::size_t>(n));
    return pow(c, static_cast<std::size_t>(m - n))[static_cast<std::size_t>(n)];
}

Grid c_p_rgf(int p, int M) {
    if (M < 1) {
        throw std::invalid_argument("c_p_rgf: M must be >= 1");
    }
    const auto order = static_cast<std::size_t>(M);
    // (1-y)^-(m+1) for m = 0..M
    const Series geometric = invert_unit(polynomial({1, -1}, order));
    std::vector<Series> powers{geometric};
    for (int m = 1; m <= M; ++m) {
        powers.push_back(powers.back() * geometric);
    }
    Grid g(0, M, 0, M);
    for (int m = 0; m <= M; ++m) {
        for (int n = 0; n <= M; ++n) {
            Rational v;
            if (m >= 1) {
                v += powers[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n)];
            }
            if (n >= 1) {
                v -= p * powers[static_cast<std::size_t>(m)][static_cast<std::size_t>(n - 1)];
            }
            g.set(m, n, std::move(v));
        }
    }
    return g;
}

Series kernel_multiplier(const StepSet& steps, const Weights& weights, std::size_t order) {
    const int K = steps.max_step();
    Series b(order);
    for (int i : steps.elements()) {
        b = b + Series::monomial(weights.at(i), static_cast<std::size_t>(K - i), order);
    }
    return b;
}

Series f_residual(const StepSet& steps, const Weights& weights, const Series& f) {
    const Series xf = shift(f, 1).truncated(f.order());
    Series rhs(f.order());
    for (int i : steps.elements()) {
        rhs = rhs + scale(pow(xf, static_cast<std::size_t>(i + 1)), weights.at(i));
    }
    return f - rhs;
}

Series solve_f(const StepSet& steps, const Weights& weights, std::size_t order) {
    return solve_fixed_point([&](const Series& s) { return s - f_residual(steps, weights, s); }, order);
}

Series g_equation_lhs(const StepSet& steps, const Weights& weights, const Series& g) {
    const int K = steps.max_step();
    const std::size_t N = g.order();
    const Series q = shift(g, static_cast<std::size_t>(K + 1)).truncated(N);
    Series total(N);
    for (int i : steps.elements()) {
        if (i < 1) {
            continue;
        }
        Series inner(N);
        Series qpow = Series::constant(1, N);
        for (int n = 1; n <= i; ++n) {
            inner = inner + qpow;
            qpow = qpow * q;
        }
        total = total + scale(shift(g * inner, static_cast<std::size_t>(K - i)).truncated(N), weights.at(i));
    }
    return total;
}

Series solve_g(const StepSet& steps, const Weights& weights, std::size_t order) {
    require_positive_k(steps, "solve_g");
    // lhs(g) = g + t*(...) because c_K = 1, so g <- g + 1 - lhs(g) contracts.
    return solve_fixed_point(
        [&](const Series& s) { return s + Series::constant(1, s.order()) - g_equation_lhs(steps, weights, s); },
        order);
}

Series g_from_f(const StepSet& steps, const Weights& weights, std::size_t order) {
    require_positive_k(steps, "g_from_f");
    const int K = steps.max_step();
    const Series inv_b = invert_unit(kernel_multiplier(steps, weights, order));
    const Series argument = shift(inv_b, static_cast<std::size_t>(K)).truncated(order);
    return inv_b * compose(solve_f(steps, weights, order), argument);
}

Series g_closed_form_k2(const StepSet& steps, const Weights& weights, std::size_t order) {
    if (steps.max_step() != 2) {
        throw std::invalid_argument("g_closed_form_k2 needs K = 2");
    }
    const Rational c1 = steps.contains(1) ? weights.at(1) : Rational(0);
    const std::size_t work = order + 3;
    const Series root = sqrt_unit(polynomial({1, 2 * c1, c1 * c1, 4}, work));
    const Series numerator = root - polynomial({1, c1}, work);
    return scale(shift_down(numerator, 3), make_rational(1, 2));
}

Series gamma(int p, std::size_t order) {
    if (p < 1) {
        throw std::invalid_argument("gamma: p must be >= 1");
    }
    if (order < 1) {
        throw std::invalid_argument("gamma: order must be >= 1");
    }
    Series a(order);
    for (int k = 1; k <= p; ++k) {
        a = a + Series::monomial(1, static_cast<std::size_t>(k), order);
    }
    return compositional_inverse(a);
}

std::size_t required_order(const StepSet& steps, int h, int M) {
    return static_cast<std::size_t>(steps.max_step() * M + h);
}

GFFamily p_h_rgf(const StepSet& steps, const Weights& weights, int h, int M, std::size_t order) {
    require_positive_k(steps, "p_h_rgf");
    if (h < 0 || M < 0) {
        throw std::invalid_argument("p_h_rgf: h and M must be non-negative");
    }
    const std::size_t need = required_order(steps, h, M);
    if (order < need) {
        throw std::invalid_argument("p_h_rgf: order " + std::to_string(order) + " is too small, need at least " +
                                    std::to_string(need));
    }
    const auto K = static_cast<std::size_t>(steps.max_step());
    const auto e = static_cast<std::size_t>(h + 1);
    const Series g = solve_g(steps, weights, order);
    const Series numerator = Series::constant(1, order) - shift(pow(g, e), e * (K + 1)).truncated(order);
    return {numerator, kernel_multiplier(steps, weights, order)};
}

GFFamily e_ph_rgf(int p, int h, int M, std::size_t order) {
    if (h < 0 || M < 0) {
        throw std::invalid_argument("e_ph_rgf: h and M must be non-negative");
    }
    const Series g = gamma(p, std::max<std::size_t>(order, 1)).truncated(order);
    const Series numerator = Series::constant(1, order) - pow(g, static_cast<std::size_t>(h + 1));
    return {numerator, polynomial({1, 1}, order)};
}

GFFamily d_p_rgf(int p, int M, std::size_t order) { return e_ph_rgf(p, 0, M, order); }

GFFamily ns_family(std::size_t order) {
    const Series root = sqrt_unit(polynomial({1, 2, 1, 4}, order));
    const Series numerator = scale(polynomial({3, 1}, order) - root, make_rational(1, 2));
    return {numerator, polynomial({1, 1, 1, 1}, order)};
}

Rational lemma31_lhs(int n) {
    Rational sum;
    for (int i = 0; 3 * i <= n + i; ++i) {
        Rational term(binomial(n + i, 3 * i) * binomial(3 * i, i));
        term /= 2 * i + 1;
        sum += term;
    }
    return sum;
}

Rational lemma31_rhs(int n) {
    Rational r(binomial(2 * n, n));
    r /= n + 1;
    return r;
}

bool lemma31_holds(int n) { return lemma31_lhs(n) == lemma31_rhs(n); }

Rational c_p_closed_form(int p, int m, int n) {
    if (m < 0 || n < 0 || m + n == 0) {
        throw std::invalid_argument("closed form needs m, n >= 0 and m + n > 0");
    }
    Rational r(binomial(m + n, m) * (m - p * n));
    r /= m + n;
    return r;
}

}  // namespace latpath::gf
