#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mlcsm {

// Exact coefficient field for everything in this project. cpp_rational keeps
// values reduced with positive denominator on every operation.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Integer to_integer(const Rational& q) {
    if (!is_integer(q))
        throw std::logic_error("expected integer value, got " + q.str());
    return numerator(q);
}

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b = 1;
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

// Parses "a" or "a/b" with optional leading sign. Rejects anything else,
// including zero denominators.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& n) { return n.str(); }

}  // namespace mlcsm
