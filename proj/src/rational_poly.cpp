#include "supenum/rational_poly.hpp"

#include <sstream>

namespace supenum {

void RationalPoly::set(std::size_t exp, Rational value) {
    if (value == 0)
        terms_.erase(exp);
    else
        terms_[exp] = std::move(value);
}

void RationalPoly::add_to(std::size_t exp, const Rational& delta) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (delta != 0) terms_.emplace(exp, delta);
        return;
    }
    it->second += delta;
    if (it->second == 0) terms_.erase(it);
}

Rational RationalPoly::coeff(std::size_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

RationalPoly RationalPoly::operator+(const RationalPoly& rhs) const {
    RationalPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_to(e, c);
    return out;
}

RationalPoly RationalPoly::operator-(const RationalPoly& rhs) const {
    RationalPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_to(e, -c);
    return out;
}

RationalPoly RationalPoly::operator*(const Rational& scalar) const {
    RationalPoly out;
    if (scalar == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_[e] = c * scalar;
    return out;
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << var;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

RationalPoly all_coords_poly(std::size_t n) {
    RationalPoly p;
    for (std::size_t i = 1; i <= n; ++i) p.set(i, 1);
    return p;
}

}  // namespace supenum
