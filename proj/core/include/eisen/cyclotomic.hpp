#pragma once

#include <complex>
#include <string>
#include <vector>

#include "eisen/polynomial.hpp"
#include "eisen/rational.hpp"

namespace eisen {

// Phi_N, computed by exact division of x^N - 1 by Phi_d for proper divisors d.
CycPoly cyclotomic_poly(long N);

// Q(zeta_N) presented as Q[x]/Phi_N. Instances are created once per level and
// never destroyed, so references and pointers to them stay valid.
class CyclotomicField {
public:
    static const CyclotomicField& get(long N);

    long level() const { return n_; }
    std::size_t degree() const { return phi_.size() - 1; }
    const CycPoly& modulus() const { return modulus_; }

    // Reduce integer coefficients of a polynomial in zeta (any length) modulo Phi_N.
    // On return coeffs has exactly degree() entries.
    void reduce(std::vector<Integer>& coeffs) const;
    void reduce(std::vector<Rational>& coeffs) const;

    // Canonical coordinates of zeta^k.
    const std::vector<Integer>& root_power(long k) const;

    CyclotomicField(const CyclotomicField&) = delete;
    CyclotomicField& operator=(const CyclotomicField&) = delete;

private:
    explicit CyclotomicField(long N);
    long n_;
    CycPoly modulus_;
    std::vector<long> phi_;  // integer coefficients of Phi_N, ascending, monic
    std::vector<std::vector<Integer>> powers_;
};

// An exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
class CycNum {
public:
    // The zero of Q (level 1).
    CycNum();
    explicit CycNum(long N);
    CycNum(long N, const Rational& value);
    CycNum(const CyclotomicField& field, std::vector<Rational> coords);

    static CycNum zero(long N) { return CycNum(N); }
    static CycNum one(long N) { return CycNum(N, Rational(1)); }
    static CycNum root_power(long N, long k);
    // Element sum_j c_j zeta^j, any length.
    static CycNum from_group_algebra(long N, const std::vector<Rational>& c);
    static CycNum from_group_algebra(long N, const std::vector<Integer>& c);
    // Parse the JSON-style coordinate strings produced by coord_strings().
    static CycNum from_coord_strings(long N, const std::vector<std::string>& coords);

    long level() const { return field_->level(); }
    const CyclotomicField& field() const { return *field_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Only meaningful when is_rational().
    const Rational& rational_part() const { return c_[0]; }

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const Rational& r);
    CycNum& operator*=(const CycNum& o);
    // this += a * r
    void add_scaled(const CycNum& a, const Rational& r);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const Rational& r) { return a *= r; }
    friend CycNum operator*(const Rational& r, CycNum a) { return a *= r; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend bool operator==(const CycNum& a, const CycNum& b);

    CycNum inv() const;
    // zeta -> zeta^k, requires gcd(k, N) = 1.
    CycNum galois(long k) const;

    std::complex<double> to_complex() const;
    std::vector<std::string> coord_strings() const;
    std::string str() const;

private:
    void check_same_level(const CycNum& o) const;
    const CyclotomicField* field_;
    std::vector<Rational> c_;
};

}  // namespace eisen
