#include "eisen/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "eisen/arith.hpp"

namespace eisen {

namespace {

std::recursive_mutex& poly_mutex() {
    static std::recursive_mutex m;
    return m;
}

std::map<long, CycPoly>& poly_cache() {
    static std::map<long, CycPoly> cache;
    return cache;
}

}  // namespace

CycPoly cyclotomic_poly(long N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_poly: N must be positive");
    std::lock_guard lock(poly_mutex());
    auto& cache = poly_cache();
    if (auto it = cache.find(N); it != cache.end()) return it->second;

    std::vector<Rational> xn(static_cast<std::size_t>(N) + 1);
    xn[0] = -1;
    xn[static_cast<std::size_t>(N)] = 1;
    CycPoly num(std::move(xn));
    for (long d : divisors(N)) {
        if (d == N) break;
        auto [q, r] = num.divmod(cyclotomic_poly(d));
        if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
        num = std::move(q);
    }
    cache.emplace(N, num);
    return num;
}

// ---------------------------------------------------------------------------
// CyclotomicField

const CyclotomicField& CyclotomicField::get(long N) {
    if (N < 1) throw std::invalid_argument("CyclotomicField: level must be positive");
    static std::mutex m;
    static std::map<long, std::unique_ptr<CyclotomicField>> fields;
    std::lock_guard lock(m);
    auto it = fields.find(N);
    if (it == fields.end())
        it = fields.emplace(N, std::unique_ptr<CyclotomicField>(new CyclotomicField(N))).first;
    return *it->second;
}

CyclotomicField::CyclotomicField(long N) : n_(N), modulus_(cyclotomic_poly(N)) {
    for (const auto& c : modulus_.coeffs()) {
        if (!c.is_integer() || !c.num().fits_slong_p())
            throw std::logic_error("CyclotomicField: unexpected modulus coefficient");
        phi_.push_back(c.num().get_si());
    }
    powers_.reserve(static_cast<std::size_t>(N));
    for (long k = 0; k < N; ++k) {
        std::vector<Integer> v(static_cast<std::size_t>(k) + 1);
        v[static_cast<std::size_t>(k)] = 1;
        reduce(v);
        powers_.push_back(std::move(v));
    }
}

void CyclotomicField::reduce(std::vector<Integer>& v) const {
    const std::size_t d = degree();
    for (std::size_t i = v.size(); i-- > d;) {
        if (v[i] == 0) continue;
        const Integer c = v[i];
        for (std::size_t j = 0; j < d; ++j)
            if (phi_[j] != 0) v[i - d + j] -= c * phi_[j];
        v[i] = 0;
    }
    v.resize(d);
}

void CyclotomicField::reduce(std::vector<Rational>& v) const {
    const std::size_t d = degree();
    for (std::size_t i = v.size(); i-- > d;) {
        if (v[i].is_zero()) continue;
        const mpq_class c = v[i].raw();
        for (std::size_t j = 0; j < d; ++j) {
            if (phi_[j] == 0) continue;
            v[i - d + j].raw() -= c * phi_[j];
        }
        v[i] = Rational();
    }
    v.resize(d);
}

const std::vector<Integer>& CyclotomicField::root_power(long k) const {
    return powers_[static_cast<std::size_t>(mod(k, n_))];
}

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum() : CycNum(1) {}

CycNum::CycNum(long N) : field_(&CyclotomicField::get(N)), c_(field_->degree()) {}

CycNum::CycNum(long N, const Rational& value) : CycNum(N) { c_[0] = value; }

CycNum::CycNum(const CyclotomicField& field, std::vector<Rational> coords)
    : field_(&field), c_(std::move(coords)) {
    if (c_.size() > field_->degree()) field_->reduce(c_);
    c_.resize(field_->degree());
}

CycNum CycNum::root_power(long N, long k) {
    const auto& f = CyclotomicField::get(N);
    const auto& p = f.root_power(k);
    std::vector<Rational> c(p.begin(), p.end());
    return CycNum(f, std::move(c));
}

CycNum CycNum::from_group_algebra(long N, const std::vector<Rational>& c) {
    const auto& f = CyclotomicField::get(N);
    std::vector<Rational> v(static_cast<std::size_t>(N));
    for (std::size_t j = 0; j < c.size(); ++j) v[static_cast<std::size_t>(static_cast<long>(j) % N)] += c[j];
    f.reduce(v);
    return CycNum(f, std::move(v));
}

CycNum CycNum::from_group_algebra(long N, const std::vector<Integer>& c) {
    const auto& f = CyclotomicField::get(N);
    std::vector<Integer> v(static_cast<std::size_t>(N));
    for (std::size_t j = 0; j < c.size(); ++j) v[static_cast<std::size_t>(static_cast<long>(j) % N)] += c[j];
    f.reduce(v);
    return CycNum(f, std::vector<Rational>(v.begin(), v.end()));
}

CycNum CycNum::from_coord_strings(long N, const std::vector<std::string>& coords) {
    const auto& f = CyclotomicField::get(N);
    if (coords.size() != f.degree())
        throw std::invalid_argument("CycNum: expected " + std::to_string(f.degree()) + " coordinates");
    std::vector<Rational> c;
    for (const auto& s : coords) c.push_back(Rational::parse(s));
    return CycNum(f, std::move(c));
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

void CycNum::check_same_level(const CycNum& o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("CycNum: level mismatch (" + std::to_string(level()) + " vs " +
                                    std::to_string(o.level()) + ")");
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    check_same_level(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    check_same_level(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum& CycNum::operator*=(const Rational& r) {
    for (auto& x : c_) x *= r;
    return *this;
}

void CycNum::add_scaled(const CycNum& a, const Rational& r) {
    check_same_level(a);
    if (r.is_zero()) return;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!a.c_[i].is_zero()) c_[i].add_product(a.c_[i], r);
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    a.check_same_level(b);
    const std::size_t d = a.c_.size();
    if (d == 1) return CycNum(*a.field_, {a.c_[0] * b.c_[0]});
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (!b.c_[j].is_zero()) prod[i + j].add_product(a.c_[i], b.c_[j]);
    }
    a.field_->reduce(prod);
    return CycNum(*a.field_, std::move(prod));
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

bool operator==(const CycNum& a, const CycNum& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

CycNum CycNum::inv() const {
    if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
    auto [g, s] = half_extended_gcd(CycPoly(c_), field_->modulus());
    // Phi_N is irreducible, so any nonzero element of lower degree is coprime to it.
    if (g.degree() != 0) throw std::logic_error("CycNum: modulus not coprime to element");
    std::vector<Rational> c = s.coeffs();
    c.resize(field_->degree());
    return CycNum(*field_, std::move(c));
}

CycNum CycNum::galois(long k) const {
    const long N = level();
    if (gcd_level(k, N) != 1)
        throw std::invalid_argument("CycNum::galois: k must be coprime to the level");
    std::vector<Rational> v(static_cast<std::size_t>(N));
    for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(mod(static_cast<long>(i) * k, N))] += c_[i];
    field_->reduce(v);
    return CycNum(*field_, std::move(v));
}

std::complex<double> CycNum::to_complex() const {
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    long double re = 0, im = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        long double x = c_[i].to_long_double();
        long double t = two_pi * static_cast<long double>(i) / static_cast<long double>(level());
        re += x * std::cos(t);
        im += x * std::sin(t);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::vector<std::string> CycNum::coord_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.str());
    return out;
}

std::string CycNum::str() const {
    std::vector<Rational> v = c_;
    std::string s = CycPoly(std::move(v)).str("z");
    return s;
}

}  // namespace eisen
