#include "mlcsm/rational.hpp"

#include <cctype>

namespace mlcsm {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!all_digits(num))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer n{std::string(num)};
    Integer d = 1;
    if (slash != std::string_view::npos) {
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(den))
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        d = Integer(std::string(den));
        if (d == 0)
            throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    if (negative) n = -n;
    return Rational(n, d);
}

}  // namespace mlcsm
