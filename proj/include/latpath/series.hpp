#ifndef LATPATH_SERIES_HPP
#define LATPATH_SERIES_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "latpath/rational.hpp"

namespace latpath {

/// Truncated formal power series in one variable t over exact rationals.
///
/// A series of order N knows its coefficients for degrees 0..N. Binary
/// operations truncate to the smaller order of their operands, so a result
/// never claims more precision than its inputs support.
class Series {
public:
    /// The zero series of the given order.
    explicit Series(std::size_t order = 0);
    /// Coefficients for degrees 0..coeffs.size()-1; throws on an empty vector.
    explicit Series(std::vector<Rational> coeffs);

    static Series constant(const Rational& c, std::size_t order);
    static Series monomial(const Rational& c, std::size_t degree, std::size_t order);
    static Series variable(std::size_t order) { return monomial(1, 1, order); }

    std::size_t order() const { return coeffs_.size() - 1; }

    /// Coefficient of t^degree; throws std::out_of_range past the order.
    const Rational& operator[](std::size_t degree) const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    /// Keeps degrees 0..order; order must not exceed the current order.
    Series truncated(std::size_t order) const;

    bool is_integral() const;
    bool is_zero() const;
    /// Lowest degree with a nonzero coefficient, or order()+1 for zero.
    std::size_t valuation() const;

    /// "c0 + c1*t + c2*t^2 + ..." with every coefficient written out.
    std::string to_string() const;

    /// Coefficientwise equality up to the smaller of the two orders.
    friend bool operator==(const Series& a, const Series& b);

private:
    std::vector<Rational> coeffs_;
};

/// JSON array of exact coefficient strings, e.g. ["1","-1","1/2"].
std::string to_json(const Series& s);

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);

inline Series add(const Series& a, const Series& b) { return a + b; }
inline Series mul(const Series& a, const Series& b) { return a * b; }
Series scale(const Series& a, const Rational& r);

/// Multiplies by t^k. The result knows k more coefficients than a.
Series shift(const Series& a, std::size_t k);

/// Divides by t^k; the k lowest coefficients must be zero.
Series shift_down(const Series& a, std::size_t k);

Series pow(const Series& a, std::size_t exponent);
Series derivative(const Series& a);

/// Multiplicative inverse; the constant term must be nonzero ("not a unit").
Series invert_unit(const Series& a);

/// Square root with constant term 1 of a series whose constant term is 1,
/// by the coefficient recurrence 2*y0*yn = an - sum y_i y_{n-i}.
Series sqrt_unit(const Series& a);
/// Same root via Newton iteration y <- (y + a/y)/2.
Series sqrt_unit_newton(const Series& a);

/// outer(inner(t)); inner must have zero constant term.
Series compose(const Series& outer, const Series& inner);

/// The series b with a(b(t)) = t. Needs a0 = 0 and a1 != 0.
Series compositional_inverse(const Series& a);

using SeriesMap = std::function<Series(const Series&)>;

/// Unique fixed point s = builder(s) of a t-adically contracting map.
///
/// The degree-d coefficient of builder(s) may depend only on coefficients of
/// s below degree d. Iteration starts from the constant series `seed`; a map
/// that changes an already fixed degree throws std::domain_error
/// ("not t-adically contracting").
Series solve_fixed_point(const SeriesMap& builder, std::size_t order, const Rational& seed = 1);

}  // namespace latpath

#endif  // LATPATH_SERIES_HPP
