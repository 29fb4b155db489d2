#include "latpath/rational.hpp"

#include <stdexcept>

namespace latpath {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Integer binomial(long n, long k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: negative upper index");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Integer catalan_number(long n) {
    Integer c = binomial(2 * n, n);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return c;
}

}  // namespace latpath
