#include "mlcsm/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mlcsm {

BiPoly BiPoly::constant(Rational c) { return monomial(0, 0, std::move(c)); }

BiPoly BiPoly::monomial(int ex, int ey, Rational c) {
    BiPoly p;
    if (c != 0) p.terms_[{ex, ey}] = std::move(c);
    return p;
}

BiPoly BiPoly::linear(Rational a, Rational b, Rational c) {
    BiPoly p;
    p.set_term(1, 0, std::move(a));
    p.set_term(0, 1, std::move(b));
    p.set_term(0, 0, std::move(c));
    return p;
}

BiPoly BiPoly::from_unipoly(const UniPoly& p, int var) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i)
        r.set_term(var == 0 ? i : 0, var == 0 ? 0 : i, p.coeff(i));
    return r;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

void BiPoly::set_term(int ex, int ey, Rational c) {
    if (c == 0)
        terms_.erase({ex, ey});
    else
        terms_[{ex, ey}] = std::move(c);
}

int BiPoly::degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, var == 0 ? e.first : e.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e{e1.first + e2.first, e1.second + e2.second};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = c1 * c2;
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

BiPoly BiPoly::operator*(const Rational& s) const {
    if (s == 0) return {};
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < e.first; ++i) t *= x;
        for (int i = 0; i < e.second; ++i) t *= y;
        acc += t;
    }
    return acc;
}

BiPoly BiPoly::derivative(int var) const {
    BiPoly r;
    for (const auto& [e, c] : terms_) {
        int k = var == 0 ? e.first : e.second;
        if (k == 0) continue;
        Exponents d = var == 0 ? Exponents{e.first - 1, e.second}
                               : Exponents{e.first, e.second - 1};
        r.terms_[d] = c * Rational(k);
    }
    return r;
}

UniPoly BiPoly::coeff_in(int var, int k) const {
    int other_deg = -1;
    for (const auto& [e, c] : terms_)
        if ((var == 0 ? e.first : e.second) == k)
            other_deg = std::max(other_deg, var == 0 ? e.second : e.first);
    std::vector<Rational> coeffs(other_deg + 1);
    for (const auto& [e, c] : terms_)
        if ((var == 0 ? e.first : e.second) == k)
            coeffs[var == 0 ? e.second : e.first] = c;
    return UniPoly::from_coeffs(std::move(coeffs));
}

BiPoly BiPoly::shear(int var, const Integer& lambda) const {
    // var = 0: x -> x + lambda*y.  var = 1: y -> y + lambda*x.
    BiPoly r;
    for (const auto& [e, c] : terms_) {
        int k = var == 0 ? e.first : e.second;
        Integer lam_pow = 1;
        for (int j = 0; j <= k; ++j) {
            // (v + lambda*w)^k expands with binomial coefficients.
            Rational term = c * Rational(binomial(k, j) * lam_pow);
            Exponents ne = var == 0 ? Exponents{k - j, e.second + j}
                                    : Exponents{e.first + j, k - j};
            auto it = r.terms_.find(ne);
            if (it == r.terms_.end()) {
                if (term != 0) r.terms_[ne] = term;
            } else {
                it->second += term;
                if (it->second == 0) r.terms_.erase(it);
            }
            lam_pow *= lambda;
        }
    }
    return r;
}

Rational BiPoly::top_form_value(int var, const Integer& lambda) const {
    int d = total_degree();
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e.first + e.second != d) continue;
        int k = var == 0 ? e.first : e.second;
        Integer lam_pow = 1;
        for (int i = 0; i < k; ++i) lam_pow *= lambda;
        acc += c * Rational(lam_pow);
    }
    return acc;
}

BiPoly BiPoly::strip_monomial_content() const {
    if (terms_.empty()) return {};
    int min_x = terms_.begin()->first.first, min_y = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) {
        min_x = std::min(min_x, e.first);
        min_y = std::min(min_y, e.second);
    }
    BiPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_[{e.first - min_x, e.second - min_y}] = c;
    return r;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        bool has_var = e.first > 0 || e.second > 0;
        if (a != 1 || !has_var) out << a.str();
        bool star = a != 1;
        if (e.first > 0) {
            if (star) out << "*";
            out << "x";
            if (e.first > 1) out << "^" << e.first;
            star = true;
        }
        if (e.second > 0) {
            if (star) out << "*";
            out << "y";
            if (e.second > 1) out << "^" << e.second;
        }
        first = false;
    }
    return out.str();
}

namespace {

// Fraction-free Bareiss determinant over Q[t]; divisions are exact.
UniPoly det_bareiss(std::vector<std::vector<UniPoly>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return UniPoly(Rational(1));
    int sign = 1;
    UniPoly prev(Rational(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return {};
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    UniPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

UniPoly sylvester_resultant(const BiPoly& p, const BiPoly& q, int eliminate) {
    int m = p.degree(eliminate), l = q.degree(eliminate);
    if (m <= 0 || l <= 0) throw std::invalid_argument("nothing to eliminate");
    int n = m + l;
    std::vector<std::vector<UniPoly>> mat(n, std::vector<UniPoly>(n));
    for (int row = 0; row < l; ++row)
        for (int k = 0; k <= m; ++k)
            mat[row][row + k] = p.coeff_in(eliminate, m - k);
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= l; ++k)
            mat[l + row][row + k] = q.coeff_in(eliminate, l - k);
    return det_bareiss(std::move(mat));
}

}  // namespace mlcsm
