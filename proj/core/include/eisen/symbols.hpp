#pragma once

#include <string>
#include <vector>

#include "eisen/rational.hpp"

namespace eisen {

// Rational combination of the formal symbols F_a (a = 0..N-1), standing for
// f_2^a(q), and G_a (a = 1..N-1), standing for the normalized weight-two
// series g~_2^a(q). G_0 is absent on purpose: it coincides with F_0.
class SymbolVec {
public:
    SymbolVec() : SymbolVec(1) {}
    explicit SymbolVec(long N);

    static SymbolVec F(long N, long a, const Rational& c = 1);
    // G_0 is folded into F_0.
    static SymbolVec G(long N, long a, const Rational& c = 1);

    long level() const { return n_; }
    const Rational& f(long a) const { return f_[static_cast<std::size_t>(a)]; }
    const Rational& g(long a) const { return g_[static_cast<std::size_t>(a)]; }
    Rational& f(long a) { return f_[static_cast<std::size_t>(a)]; }
    Rational& g(long a) { return g_[static_cast<std::size_t>(a)]; }
    const std::vector<Rational>& f_part() const { return f_; }
    // Indexed by a; slot 0 is unused and always zero.
    const std::vector<Rational>& g_part() const { return g_; }

    bool is_zero() const;

    SymbolVec& operator+=(const SymbolVec& o);
    SymbolVec& operator-=(const SymbolVec& o);
    SymbolVec& operator*=(const Rational& r);
    void add_scaled(const SymbolVec& o, const Rational& r);
    SymbolVec operator-() const;
    friend SymbolVec operator+(SymbolVec a, const SymbolVec& b) { return a += b; }
    friend SymbolVec operator-(SymbolVec a, const SymbolVec& b) { return a -= b; }
    friend SymbolVec operator*(SymbolVec a, const Rational& r) { return a *= r; }
    friend SymbolVec operator*(const Rational& r, SymbolVec a) { return a *= r; }
    friend bool operator==(const SymbolVec&, const SymbolVec&) = default;

    // e.g. "G1 - F0 - 2*F1"
    std::string str() const;

private:
    void check_level(const SymbolVec& o) const;
    long n_;
    std::vector<Rational> f_;
    std::vector<Rational> g_;
};

}  // namespace eisen
