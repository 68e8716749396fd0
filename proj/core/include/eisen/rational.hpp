#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eisen {

using Integer = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long long v);
    Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "n", "-n" or "n/d".
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    long double to_long_double() const;
    std::string str() const { return q_.get_str(); }

    const mpq_class& raw() const { return q_; }
    mpq_class& raw() { return q_; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    // this += a * b without temporaries
    void add_product(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);
Integer power(long base, unsigned exponent);
// Binomial coefficient with C(n,k) = 0 outside 0 <= k <= n.
Integer binomial(long n, long k);

}  // namespace eisen

template <>
struct std::hash<eisen::Rational> {
    std::size_t operator()(const eisen::Rational& r) const noexcept;
};
