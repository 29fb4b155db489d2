#include "latpath/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace latpath {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("series needs at least one coefficient");
    }
}

Series Series::constant(const Rational& c, std::size_t order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::monomial(const Rational& c, std::size_t degree, std::size_t order) {
    Series s(order);
    if (degree <= order) {
        s.coeffs_[degree] = c;
    }
    return s;
}

const Rational& Series::operator[](std::size_t degree) const {
    if (degree >= coeffs_.size()) {
        throw std::out_of_range("series coefficient t^" + std::to_string(degree) +
                                " beyond order " + std::to_string(order()));
    }
    return coeffs_[degree];
}

Series Series::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw std::invalid_argument("cannot raise series order " + std::to_string(this->order()) +
                                    " to " + std::to_string(order));
    }
    return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

bool Series::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

std::size_t Series::valuation() const {
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (sgn(coeffs_[d]) != 0) {
            return d;
        }
    }
    return coeffs_.size();
}

std::string Series::to_string() const {
    std::ostringstream out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (d > 0) {
            out << " + ";
        }
        out << latpath::to_string(coeffs_[d]);
        if (d == 1) {
            out << "*t";
        } else if (d > 1) {
            out << "*t^" << d;
        }
    }
    return out.str();
}

std::string to_json(const Series& s) {
    auto arr = nlohmann::json::array();
    for (const auto& c : s.coefficients()) {
        arr.push_back(to_string(c));
    }
    return arr.dump();
}

bool operator==(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t d = 0; d <= n; ++d) {
        if (a.coeffs_[d] != b.coeffs_[d]) {
            return false;
        }
    }
    return true;
}

Series operator+(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        c[d] = a[d] + b[d];
    }
    return Series(std::move(c));
}

Series operator-(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        c[d] = a[d] - b[d];
    }
    return Series(std::move(c));
}

Series operator-(const Series& a) { return scale(a, -1); }

Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (sgn(b[j]) != 0) {
                c[i + j] += a[i] * b[j];
            }
        }
    }
    return Series(std::move(c));
}

Series scale(const Series& a, const Rational& r) {
    std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : c) {
        x *= r;
    }
    return Series(std::move(c));
}

Series shift(const Series& a, std::size_t k) {
    std::vector<Rational> c(a.order() + k + 1);
    std::copy(a.coefficients().begin(), a.coefficients().end(), c.begin() + static_cast<long>(k));
    return Series(std::move(c));
}

Series shift_down(const Series& a, std::size_t k) {
    if (k > a.order()) {
        throw std::invalid_argument("shift_down past the series order");
    }
    for (std::size_t d = 0; d < k; ++d) {
        if (sgn(a[d]) != 0) {
            throw std::domain_error("shift_down: coefficient of t^" + std::to_string(d) + " is nonzero");
        }
    }
    return Series(std::vector<Rational>(a.coefficients().begin() + static_cast<long>(k), a.coefficients().end()));
}

Series pow(const Series& a, std::size_t exponent) {
    Series result = Series::constant(1, a.order());
    Series base = a;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

Series derivative(const Series& a) {
    if (a.order() == 0) {
        return Series(0);
    }
    std::vector<Rational> c(a.order());
    for (std::size_t d = 1; d <= a.order(); ++d) {
        c[d - 1] = a[d] * static_cast<unsigned long>(d);
    }
    return Series(std::move(c));
}

Series invert_unit(const Series& a) {
    if (sgn(a[0]) == 0) {
        throw std::domain_error("invert_unit: not a unit (zero constant term)");
    }
    const std::size_t n = a.order();
    const Rational inv0 = 1 / a[0];
    std::vector<Rational> b(n + 1);
    b[0] = inv0;
    for (std::size_t d = 1; d <= n; ++d) {
        Rational acc;
        for (std::size_t i = 1; i <= d; ++i) {
            if (sgn(a[i]) != 0) {
                acc += a[i] * b[d - i];
            }
        }
        b[d] = -acc * inv0;
    }
    return Series(std::move(b));
}

namespace {

void require_unit_constant(const Series& a, const char* who) {
    if (a[0] != 1) {
        throw std::domain_error(std::string(who) + ": constant term must be 1, got " + to_string(a[0]));
    }
}

// Appends zero coefficients up to the given order.
Series padded(const Series& a, std::size_t order) {
    std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
    c.resize(std::max(order + 1, c.size()));
    return Series(std::move(c));
}

constexpr int kMaxNewtonSteps = 64;

}  // namespace

Series sqrt_unit(const Series& a) {
    require_unit_constant(a, "sqrt_unit");
    const std::size_t n = a.order();
    std::vector<Rational> y(n + 1);
    y[0] = 1;
    for (std::size_t d = 1; d <= n; ++d) {
        Rational acc = a[d];
        for (std::size_t i = 1; i < d; ++i) {
            acc -= y[i] * y[d - i];
        }
        y[d] = acc / 2;
    }
    return Series(std::move(y));
}

Series sqrt_unit_newton(const Series& a) {
    require_unit_constant(a, "sqrt_unit_newton");
    Series y = Series::constant(1, a.order());
    for (int step = 0; step < kMaxNewtonSteps; ++step) {
        Series next = scale(y + a * invert_unit(y), make_rational(1, 2));
        if (next == y) {
            return y;
        }
        y = std::move(next);
    }
    throw std::runtime_error("sqrt_unit_newton: iteration did not settle");
}

Series compose(const Series& outer, const Series& inner) {
    if (sgn(inner[0]) != 0) {
        throw std::domain_error("compose: inner series has nonzero constant term");
    }
    const std::size_t n = std::min(outer.order(), inner.order());
    const Series in = inner.truncated(n);
    Series result = Series::constant(outer[n], n);
    for (std::size_t d = n; d-- > 0;) {
        result = result * in;
        std::vector<Rational> c(result.coefficients().begin(), result.coefficients().end());
        c[0] += outer[d];
        result = Series(std::move(c));
    }
    return result;
}

Series compositional_inverse(const Series& a) {
    if (a.order() < 1) {
        throw std::invalid_argument("compositional_inverse: order must be at least 1");
    }
    if (sgn(a[0]) != 0) {
        throw std::domain_error("compositional_inverse: nonzero constant term");
    }
    if (sgn(a[1]) == 0) {
        throw std::domain_error("compositional_inverse: zero linear coefficient");
    }
    const std::size_t n = a.order();
    const Series t = Series::variable(n);
    // a' is only known to degree n-1. The Newton residual always has
    // valuation >= 2, so the padded top coefficient never reaches degree n.
    const Series da = padded(derivative(a), n);
    Series b = Series::monomial(1 / a[1], 1, n);
    for (int step = 0; step < kMaxNewtonSteps; ++step) {
        Series residual = compose(a, b) - t;
        if (residual.is_zero()) {
            return b;
        }
        b = b - residual * invert_unit(compose(da, b));
    }
    throw std::runtime_error("compositional_inverse: Newton iteration did not settle");
}

Series solve_fixed_point(const SeriesMap& builder, std::size_t order, const Rational& seed) {
    const std::string contraction_error = "solve_fixed_point: builder is not t-adically contracting";
    Series s = Series::constant(seed, 0);
    // Pass k fixes degree k: its input agrees with the fixed point below k.
    for (std::size_t k = 0; k <= order; ++k) {
        Series input = k == 0 ? s : padded(s, k);
        Series out = builder(input);
        if (out.order() < k) {
            throw std::domain_error("solve_fixed_point: builder lost precision (order " +
                                    std::to_string(out.order()) + " < " + std::to_string(k) + ")");
        }
        out = out.truncated(k);
        if (k > 0 && !(out.truncated(k - 1) == s)) {
            throw std::domain_error(contraction_error);
        }
        s = std::move(out);
    }
    Series check = builder(s);
    if (check.order() < order || !(check.truncated(order) == s)) {
        throw std::domain_error(contraction_error);
    }
    return s;
}

}  // namespace latpath
