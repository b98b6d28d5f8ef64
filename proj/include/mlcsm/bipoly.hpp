#pragma once

#include "mlcsm/rational.hpp"
#include "mlcsm/unipoly.hpp"

#include <map>
#include <string>
#include <utility>

namespace mlcsm {

/// Sparse polynomial in two variables over Q; exponent pairs map to nonzero
/// coefficients. Variable 0 is x, variable 1 is y.
class BiPoly {
public:
    using Exponents = std::pair<int, int>;

    BiPoly() = default;
    static BiPoly constant(Rational c);
    static BiPoly monomial(int ex, int ey, Rational c);
    /// a*x + b*y + c.
    static BiPoly linear(Rational a, Rational b, Rational c);
    static BiPoly from_unipoly(const UniPoly& p, int var);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    void set_term(int ex, int ey, Rational c);

    /// Degree in one variable; -1 for the zero polynomial.
    int degree(int var) const;
    int total_degree() const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly operator*(const Rational& s) const;
    bool operator==(const BiPoly& o) const = default;

    Rational operator()(const Rational& x, const Rational& y) const;
    BiPoly derivative(int var) const;

    /// Coefficient of var^k, a univariate polynomial in the other variable.
    UniPoly coeff_in(int var, int k) const;

    /// Substitutes var := var + lambda * other; an invertible change of
    /// coordinates that makes the leading coefficient in the other variable
    /// constant for generic lambda.
    BiPoly shear(int var, const Integer& lambda) const;

    /// Top homogeneous form evaluated at (lambda, 1) for var = 0 or
    /// (1, lambda) for var = 1: the leading coefficient after shear(var, lambda).
    Rational top_form_value(int var, const Integer& lambda) const;

    /// Divides out the largest monomial x^a y^b; identity on the zero polynomial.
    BiPoly strip_monomial_content() const;

    std::string to_string() const;

private:
    std::map<Exponents, Rational> terms_;
};

/// Determinant of the Sylvester matrix with respect to the eliminated
/// variable, as a polynomial in the other variable. Both inputs must have
/// positive degree in the eliminated variable.
UniPoly sylvester_resultant(const BiPoly& p, const BiPoly& q, int eliminate);

}  // namespace mlcsm
