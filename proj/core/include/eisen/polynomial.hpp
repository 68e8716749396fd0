#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eisen/rational.hpp"

namespace eisen {

// Dense univariate polynomial over Q, ascending degree. The zero polynomial
// has no coefficients; otherwise the leading coefficient is nonzero.
class CycPoly {
public:
    CycPoly() = default;
    explicit CycPoly(std::vector<Rational> coeffs);
    static CycPoly monomial(const Rational& c, std::size_t degree);

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& x) const;
    std::string str(const char* var = "x") const;

    CycPoly& operator+=(const CycPoly& o);
    CycPoly& operator-=(const CycPoly& o);
    CycPoly& operator*=(const Rational& c);
    friend CycPoly operator+(CycPoly a, const CycPoly& b) { return a += b; }
    friend CycPoly operator-(CycPoly a, const CycPoly& b) { return a -= b; }
    friend CycPoly operator*(CycPoly a, const Rational& c) { return a *= c; }
    friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
    friend bool operator==(const CycPoly&, const CycPoly&) = default;

    // Quotient and remainder; throws on a zero divisor.
    std::pair<CycPoly, CycPoly> divmod(const CycPoly& divisor) const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Returns (g, s) with g = gcd(a, m) monic and s*a = g (mod m).
std::pair<CycPoly, CycPoly> half_extended_gcd(const CycPoly& a, const CycPoly& m);

}  // namespace eisen
