#pragma once

#include <optional>
#include <vector>

#include "eisen/cyclotomic.hpp"

namespace eisen {

// Power series in q over Q(zeta_N), truncated after q^M. All arithmetic is
// exact through q^M and never looks past it.
class QSeries {
public:
    QSeries() : QSeries(1, 0) {}
    QSeries(long N, int M);

    long level() const { return n_; }
    int truncation() const { return m_; }
    const CycNum& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    CycNum& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<CycNum>& coeffs() const { return c_; }

    bool is_zero() const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const Rational& r);
    QSeries& operator*=(const CycNum& c);
    // this += o * r
    void add_scaled(const QSeries& o, const Rational& r);
    void add_scaled(const QSeries& o, const CycNum& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& r) { return a *= r; }
    friend QSeries operator*(QSeries a, const CycNum& c) { return a *= c; }
    // Truncated Cauchy product.
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend bool operator==(const QSeries& a, const QSeries& b);

    // Smallest power where the two series differ, or nullopt if equal through q^M.
    std::optional<int> first_difference(const QSeries& o) const;

private:
    void check_compatible(const QSeries& o) const;
    long n_;
    int m_;
    std::vector<CycNum> c_;
};

}  // namespace eisen
