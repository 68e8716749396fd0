#include "eisen/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace eisen {

Rational::Rational(long long v) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
    q_ = static_cast<long>(v);
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

long double Rational::to_long_double() const {
    // mpq_get_d truncates to double; good enough for the numeric side,
    // which only ever compares against double-precision sums.
    return static_cast<long double>(q_.get_d());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(n, d);
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer power(long base, unsigned exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), exponent);
    return r;
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace eisen

std::size_t std::hash<eisen::Rational>::operator()(const eisen::Rational& r) const noexcept {
    std::size_t h = mpz_get_ui(r.raw().get_num_mpz_t());
    h ^= mpz_get_ui(r.raw().get_den_mpz_t()) * 0x9e3779b97f4a7c15ULL;
    return h ^ static_cast<std::size_t>(r.sign() + 1);
}
