#ifndef LATPATH_GFENGINE_HPP
#define LATPATH_GFENGINE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "latpath/grid.hpp"
#include "latpath/series.hpp"
#include "latpath/steps.hpp"

namespace latpath::gf {

/// Bivariate generating function numerator/(1 - x*kernel), stored as a
/// family of t-series: the coefficient of x^m is numerator * kernel^m.
struct GFFamily {
    Series numerator;
    Series kernel;

    Series column(int m) const;
    std::vector<Series> columns(int M) const;
    Rational coefficient(int m, std::size_t n) const { return column(m)[n]; }
    std::string to_json() const;
};

/// c(x) = (1 - sqrt(1-4x)) / (2x) through sqrt_unit.
Series catalan_gf(std::size_t order);

/// Coefficient of x^m y^n in 1/(1 - x c(xy)): [u^n] c(u)^(m-n) for m >= n.
Rational eq204_coefficient(int m, int n);

/// (x - p*y)/(1 - x - y) expanded as sum_m x^m (1-y)^-(m+1) times the
/// numerator, on 0..M x 0..M. p = 1 gives the ballot B' table.
Grid c_p_rgf(int p, int M);
inline Grid ballot_rgf(int M) { return c_p_rgf(1, M); }

/// The x-companion of the kernel: sum_{i in T} c_i t^(K-i).
Series kernel_multiplier(const StepSet& steps, const Weights& weights, std::size_t order);

/// f with f(0) = 1 and f = sum_i c_i (x f)^(i+1).
Series solve_f(const StepSet& steps, const Weights& weights, std::size_t order);
/// f - sum_i c_i (x f)^(i+1), which is zero for the solution.
Series f_residual(const StepSet& steps, const Weights& weights, const Series& f);

/// g with g(0) = 1 solving
///   sum_{i in T\{0,-1}} c_i t^(K-i) g sum_{n=1..i} (t^(K+1) g)^(n-1) = 1.
/// Needs K >= 1 (for K = 0 the sum is empty).
Series solve_g(const StepSet& steps, const Weights& weights, std::size_t order);
/// Left side of the g equation evaluated at g.
Series g_equation_lhs(const StepSet& steps, const Weights& weights, const Series& g);
/// g through f: (1/B) f(t^K / B) with B the kernel multiplier.
Series g_from_f(const StepSet& steps, const Weights& weights, std::size_t order);
/// Quadratic-formula form for K = 2:
///   (-1 - c1 t + sqrt(1 + 2 c1 t + c1^2 t^2 + 4 t^3)) / (2 t^3), c1 = 0 if 1 is not in T.
Series g_closed_form_k2(const StepSet& steps, const Weights& weights, std::size_t order);

/// Compositional inverse of t + t^2 + ... + t^p.
Series gamma(int p, std::size_t order);

/// Smallest truncation order covering every combinatorial cell with m <= M.
std::size_t required_order(const StepSet& steps, int h, int M);

/// (1 - g^(h+1) t^((h+1)(K+1))) / (1 - x B(t)); x^m t^n <-> P'_h(m, K m + h - n).
/// Throws std::invalid_argument when order < K*M + h.
GFFamily p_h_rgf(const StepSet& steps, const Weights& weights, int h, int M, std::size_t order);

/// (1 - gamma) / (1 - x(1+t)); x^m t^n <-> D'_p(m-n, n). The family knows
/// t-degrees up to `order`; M is the intended column range and is only
/// validated.
GFFamily d_p_rgf(int p, int M, std::size_t order);
/// (1 - gamma^(h+1)) / (1 - x(1+t)); x^m t^n <-> E'_{p,h}(m-n, n).
GFFamily e_ph_rgf(int p, int h, int M, std::size_t order);

/// The Niederhausen-Sullivan family
///   (3 + t - sqrt((1+t)^2 + 4t^3))/2 / (1 - x(1+t+t^2+t^3)),
/// whose x^m t^n coefficient is S'(m,n).
GFFamily ns_family(std::size_t order);

/// sum_i binom(n+i,3i) binom(3i,i)/(2i+1) == binom(2n,n)/(n+1), exactly.
Rational lemma31_lhs(int n);
Rational lemma31_rhs(int n);
bool lemma31_holds(int n);

/// (m - p n)/(m + n) binom(m+n, m), defined for m + n > 0.
Rational c_p_closed_form(int p, int m, int n);

}  // namespace latpath::gf

#endif  // LATPATH_GFENGINE_HPP
