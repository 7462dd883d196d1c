// Sparse univariate polynomials with exact rational coefficients.
//
// Identity checks in this project are exact by design: coefficients are
// arbitrary-precision rationals and equality is coefficient-wise, with no
// tolerances anywhere.
#pragma once

#include <cstddef>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace supenum {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class RationalPoly {
  public:
    RationalPoly() = default;

    /// Set the z^exp coefficient; zero coefficients are not stored.
    void set(std::size_t exp, Rational value);
    void add_to(std::size_t exp, const Rational& delta);

    Rational coeff(std::size_t exp) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    /// Sorted exponent -> nonzero coefficient view.
    const std::map<std::size_t, Rational>& terms() const { return terms_; }

    RationalPoly operator+(const RationalPoly& rhs) const;
    RationalPoly operator-(const RationalPoly& rhs) const;
    RationalPoly operator*(const Rational& scalar) const;

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// e.g. "4*z + 4*z^2" or "1/2*z^3"; "0" for the zero polynomial.
    std::string to_string(const std::string& var = "z") const;

  private:
    std::map<std::size_t, Rational> terms_;
};

/// Sum of z^i over i in [1, n].
RationalPoly all_coords_poly(std::size_t n);

}  // namespace supenum
