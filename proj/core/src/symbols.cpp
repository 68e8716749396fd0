#include "eisen/symbols.hpp"

#include <sstream>
#include <stdexcept>

#include "eisen/arith.hpp"

namespace eisen {

SymbolVec::SymbolVec(long N)
    : n_(N), f_(static_cast<std::size_t>(N)), g_(static_cast<std::size_t>(N)) {
    if (N < 1) throw std::invalid_argument("SymbolVec: level must be positive");
}

SymbolVec SymbolVec::F(long N, long a, const Rational& c) {
    SymbolVec v(N);
    v.f(mod(a, N)) = c;
    return v;
}

SymbolVec SymbolVec::G(long N, long a, const Rational& c) {
    SymbolVec v(N);
    long r = mod(a, N);
    if (r == 0)
        v.f(0) = c;
    else
        v.g(r) = c;
    return v;
}

void SymbolVec::check_level(const SymbolVec& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SymbolVec: level mismatch");
}

bool SymbolVec::is_zero() const {
    for (const auto& x : f_)
        if (!x.is_zero()) return false;
    for (const auto& x : g_)
        if (!x.is_zero()) return false;
    return true;
}

SymbolVec& SymbolVec::operator+=(const SymbolVec& o) {
    check_level(o);
    for (std::size_t i = 0; i < f_.size(); ++i) {
        f_[i] += o.f_[i];
        g_[i] += o.g_[i];
    }
    return *this;
}

SymbolVec& SymbolVec::operator-=(const SymbolVec& o) {
    check_level(o);
    for (std::size_t i = 0; i < f_.size(); ++i) {
        f_[i] -= o.f_[i];
        g_[i] -= o.g_[i];
    }
    return *this;
}

SymbolVec& SymbolVec::operator*=(const Rational& r) {
    for (std::size_t i = 0; i < f_.size(); ++i) {
        f_[i] *= r;
        g_[i] *= r;
    }
    return *this;
}

void SymbolVec::add_scaled(const SymbolVec& o, const Rational& r) {
    check_level(o);
    if (r.is_zero()) return;
    for (std::size_t i = 0; i < f_.size(); ++i) {
        if (!o.f_[i].is_zero()) f_[i].add_product(o.f_[i], r);
        if (!o.g_[i].is_zero()) g_[i].add_product(o.g_[i], r);
    }
}

SymbolVec SymbolVec::operator-() const {
    SymbolVec r = *this;
    r *= Rational(-1);
    return r;
}

std::string SymbolVec::str() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Rational& c, char sym, std::size_t idx) {
        if (c.is_zero()) return;
        Rational mag = c.sign() < 0 ? -c : c;
        os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mag != Rational(1)) os << mag << '*';
        os << sym << idx;
        first = false;
    };
    for (std::size_t a = 1; a < g_.size(); ++a) term(g_[a], 'G', a);
    for (std::size_t a = 0; a < f_.size(); ++a) term(f_[a], 'F', a);
    return first ? "0" : os.str();
}

}  // namespace eisen
