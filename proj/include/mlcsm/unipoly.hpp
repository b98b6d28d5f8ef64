#pragma once

#include "mlcsm/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mlcsm {

/// Univariate polynomial over Q, dense coefficients indexed by degree.
/// The zero polynomial has an empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rational constant);
    static UniPoly from_coeffs(std::vector<Rational> coeffs);
    static UniPoly monomial(int degree, Rational coeff);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const Rational& c) const;
    bool operator==(const UniPoly& o) const = default;

    Rational operator()(const Rational& x) const;
    UniPoly derivative() const;

    /// Quotient and remainder over Q; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
    /// Division known to be exact; throws logic_error on a nonzero remainder.
    UniPoly exact_div(const UniPoly& den) const;

    /// Integer-primitive associate with positive leading coefficient.
    UniPoly primitive() const;

    /// p(x + c).
    UniPoly taylor_shift(const Rational& c) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void strip();
    std::vector<Rational> coeffs_;
};

/// Gcd by subresultant PRS on integer-primitive parts; result is primitive
/// with positive leading coefficient (gcd of anything with 0 is the other
/// argument's primitive part).
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
/// Throws invalid_argument("identically zero") on the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);

/// Number of distinct complex roots: deg p - deg gcd(p, p').
int distinct_root_count(const UniPoly& p);

/// Degree-(n-1) interpolation through n points with distinct abscissae.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace mlcsm
