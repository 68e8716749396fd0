#include "eisen/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace eisen {

CycPoly::CycPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

CycPoly CycPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return CycPoly(std::move(v));
}

void CycPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational CycPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string CycPoly::str(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = mag == Rational(1);
        if (!unit || i == 0) os << mag;
        if (i > 0) os << var;
        if (i > 1) os << '^' << i;
        first = false;
    }
    return os.str();
}

CycPoly& CycPoly::operator+=(const CycPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

CycPoly& CycPoly::operator-=(const CycPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

CycPoly& CycPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j].add_product(a.c_[i], b.c_[j]);
    }
    return CycPoly(std::move(r));
}

std::pair<CycPoly, CycPoly> CycPoly::divmod(const CycPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("CycPoly: division by zero polynomial");
    std::vector<Rational> rem = c_;
    long dd = divisor.degree();
    long dr = degree();
    if (dr < dd) return {CycPoly(), *this};
    std::vector<Rational> quo(static_cast<std::size_t>(dr - dd + 1));
    Rational inv_lead = Rational(1) / divisor.leading();
    for (long i = dr; i >= dd; --i) {
        Rational c = rem[static_cast<std::size_t>(i)] * inv_lead;
        if (c.is_zero()) continue;
        quo[static_cast<std::size_t>(i - dd)] = c;
        for (long j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.c_[static_cast<std::size_t>(j)];
    }
    return {CycPoly(std::move(quo)), CycPoly(std::move(rem))};
}

std::pair<CycPoly, CycPoly> half_extended_gcd(const CycPoly& a, const CycPoly& m) {
    // Invariant: s0*a = r0, s1*a = r1 (mod m).
    CycPoly r0 = m, r1 = a;
    CycPoly s0, s1 = CycPoly({Rational(1)});
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        CycPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) return {r0, s0};
    Rational norm = Rational(1) / r0.leading();
    r0 *= norm;
    s0 *= norm;
    if (!s0.is_zero() && s0.degree() >= m.degree()) s0 = s0.divmod(m).second;
    return {r0, s0};
}

}  // namespace eisen
