#include "mlcsm/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mlcsm {

UniPoly::UniPoly(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

UniPoly UniPoly::from_coeffs(std::vector<Rational> coeffs) {
    UniPoly p;
    p.coeffs_ = std::move(coeffs);
    p.strip();
    return p;
}

UniPoly UniPoly::monomial(int degree, Rational coeff) {
    if (coeff == 0) return {};
    std::vector<Rational> c(degree + 1);
    c[degree] = std::move(coeff);
    return from_coeffs(std::move(c));
}

void UniPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

Rational UniPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i];
        if (i < o.coeffs_.size()) c[i] += o.coeffs_[i];
    }
    return from_coeffs(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (Rational& x : c) x = -x;
    return from_coeffs(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coeffs(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    std::vector<Rational> c(coeffs_);
    for (Rational& x : c) x *= s;
    return from_coeffs(std::move(c));
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rational(i);
    return from_coeffs(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UniPoly rem = num;
    if (num.degree() < den.degree()) return {UniPoly{}, rem};
    std::vector<Rational> q(num.degree() - den.degree() + 1);
    Rational lead = den.leading();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int shift = rem.degree() - den.degree();
        Rational factor = rem.leading() / lead;
        q[shift] = factor;
        rem = rem - UniPoly::monomial(shift, factor) * den;
    }
    return {from_coeffs(std::move(q)), rem};
}

UniPoly UniPoly::exact_div(const UniPoly& den) const {
    auto [q, r] = divmod(*this, den);
    if (!r.is_zero()) throw std::logic_error("polynomial division expected exact");
    return q;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return {};
    Integer den_lcm = 1;
    for (const Rational& c : coeffs_) den_lcm = lcm(den_lcm, denominator(c));
    Integer content = 0;
    for (const Rational& c : coeffs_)
        content = gcd(content, numerator(c) * (den_lcm / denominator(c)));
    Rational scale(den_lcm, content);
    if (leading() < 0) scale = -scale;
    return *this * scale;
}

UniPoly UniPoly::taylor_shift(const Rational& c) const {
    // Horner on p(x) with x := x + c.
    UniPoly acc;
    UniPoly lin = from_coeffs({c, 1});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + UniPoly(*it);
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1 || i == 0) out << a.str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

namespace {

// Integer polynomial helpers for the subresultant PRS.
using ZPoly = std::vector<Integer>;  // index = degree, no trailing zeros

void zstrip(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zmul_scalar(const ZPoly& p, const Integer& s) {
    ZPoly r(p);
    for (Integer& x : r) x *= s;
    zstrip(r);
    return r;
}

ZPoly zdiv_scalar(const ZPoly& p, const Integer& s) {
    ZPoly r(p);
    for (Integer& x : r) {
        if (x % s != 0) throw std::logic_error("inexact scalar division in PRS");
        x /= s;
    }
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    int db = zdeg(b);
    const Integer& lb = b.back();
    int steps = zdeg(a) - db + 1;
    for (int k = 0; k < steps; ++k) {
        int da = zdeg(a);
        if (da < db) {
            a = zmul_scalar(a, lb);
            continue;
        }
        Integer top = a.back();
        for (int i = 0; i < da; ++i) {
            a[i] *= lb;
            int j = i - (da - db);
            if (j >= 0) a[i] -= top * b[j];
        }
        a.pop_back();
        zstrip(a);
        if (a.empty()) break;
    }
    return a;
}

ZPoly zprimitive(const ZPoly& p) {
    Integer content = 0;
    for (const Integer& c : p) content = gcd(content, c);
    if (content == 0) return p;
    if (p.back() < 0) content = -content;
    ZPoly r(p);
    for (Integer& x : r) x /= content;
    return r;
}

ZPoly to_zpoly(const UniPoly& p) {
    UniPoly prim = p.primitive();
    ZPoly r(prim.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = numerator(prim.coeffs()[i]);
    return r;
}

UniPoly from_zpoly(const ZPoly& p) {
    std::vector<Rational> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) c[i] = Rational(p[i]);
    return UniPoly::from_coeffs(std::move(c));
}

Integer ipow(const Integer& b, int e) {
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    ZPoly f = to_zpoly(a), g = to_zpoly(b);
    if (zdeg(f) < zdeg(g)) std::swap(f, g);
    Integer gg = 1, h = 1;
    while (true) {
        int delta = zdeg(f) - zdeg(g);
        ZPoly r = zprem(f, g);
        if (r.empty()) break;
        if (zdeg(r) == 0) return UniPoly(Rational(1));
        f = std::move(g);
        g = zdiv_scalar(r, gg * ipow(h, delta));
        gg = f.back();
        if (delta > 0) h = ipow(gg, delta) / ipow(h, delta - 1);
    }
    return from_zpoly(zprimitive(g));
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("identically zero");
    if (p.degree() == 0) return UniPoly(Rational(1));
    UniPoly g = poly_gcd(p, p.derivative());
    return p.exact_div(g).primitive();
}

int distinct_root_count(const UniPoly& p) {
    return squarefree_part(p).degree();
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("interpolation needs matching nonempty point lists");
    UniPoly result;
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly basis{Rational(1)};
        Rational denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly::from_coeffs({-xs[j], 1});
            denom *= xs[i] - xs[j];
        }
        if (denom == 0) throw std::invalid_argument("repeated interpolation abscissa");
        result = result + basis * (ys[i] / denom);
    }
    return result;
}

}  // namespace mlcsm
