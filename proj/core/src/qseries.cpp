#include "eisen/qseries.hpp"

#include <stdexcept>
#include <string>

namespace eisen {

QSeries::QSeries(long N, int M) : n_(N), m_(M) {
    if (M < 0) throw std::invalid_argument("QSeries: truncation must be non-negative");
    c_.assign(static_cast<std::size_t>(M) + 1, CycNum::zero(N));
}

void QSeries::check_compatible(const QSeries& o) const {
    if (n_ != o.n_ || m_ != o.m_)
        throw std::invalid_argument("QSeries: incompatible operands (level " + std::to_string(n_) + "/" +
                                    std::to_string(o.n_) + ", truncation " + std::to_string(m_) + "/" +
                                    std::to_string(o.m_) + ")");
}

bool QSeries::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

QSeries& QSeries::operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

QSeries& QSeries::operator*=(const CycNum& x) {
    for (auto& c : c_)
        if (!c.is_zero()) c = c * x;
    return *this;
}

void QSeries::add_scaled(const QSeries& o, const Rational& r) {
    check_compatible(o);
    if (r.is_zero()) return;
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i].add_scaled(o.c_[i], r);
}

void QSeries::add_scaled(const QSeries& o, const CycNum& x) {
    check_compatible(o);
    if (x.is_zero()) return;
    if (x.is_rational()) return add_scaled(o, x.rational_part());
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] += o.c_[i] * x;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    a.check_compatible(b);
    const int M = a.m_;
    // Products are accumulated unreduced (degree < 2 phi - 1) and reduced once per power.
    const auto& field = a.c_[0].field();
    const std::size_t d = field.degree();
    std::vector<int> nz_a;
    for (int i = 0; i <= M; ++i)
        if (!a[i].is_zero()) nz_a.push_back(i);
    QSeries r(a.n_, M);
    std::vector<Rational> acc(2 * d - 1);
    for (int m = 0; m <= M; ++m) {
        bool any = false;
        for (int i : nz_a) {
            if (i > m) break;
            const int j = m - i;
            const CycNum& y = b[j];
            if (y.is_zero()) continue;
            const auto& xc = a[i].coords();
            const auto& yc = y.coords();
            for (std::size_t s = 0; s < d; ++s) {
                if (xc[s].is_zero()) continue;
                for (std::size_t t = 0; t < d; ++t)
                    if (!yc[t].is_zero()) acc[s + t].add_product(xc[s], yc[t]);
            }
            any = true;
        }
        if (!any) continue;
        std::vector<Rational> v(2 * d - 1);
        v.swap(acc);
        r[m] = CycNum(field, std::move(v));
    }
    return r;
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.c_ == b.c_;
}

std::optional<int> QSeries::first_difference(const QSeries& o) const {
    check_compatible(o);
    for (int i = 0; i <= m_; ++i)
        if (!(c_[static_cast<std::size_t>(i)] == o.c_[static_cast<std::size_t>(i)])) return i;
    return std::nullopt;
}

}  // namespace eisen
