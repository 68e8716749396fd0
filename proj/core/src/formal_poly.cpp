#include "eisen/formal_poly.hpp"

#include <sstream>
#include <stdexcept>

#include "eisen/arith.hpp"

namespace eisen {

void FormalPoly::add(int x_deg, int y_deg, long g_res, int g_wt, long b_res, int b_wt, const Rational& c) {
    if (x_deg < 0 || y_deg < 0 || x_deg + y_deg != k_ - 2)
        throw std::invalid_argument("FormalPoly: X,Y degree must be k-2");
    if (g_wt < 1 || g_wt > k_ - 1 || b_wt < 1 || b_wt > k_ - 1)
        throw std::invalid_argument("FormalPoly: symbol weight out of range");
    if (c.is_zero()) return;
    g_res = mod(g_res, n_);
    b_res = mod(b_res, n_);
    Rational coef = c;
    const long neg = mod(-b_res, n_);
    if (neg == b_res) {
        if (b_wt % 2 == 0) return;
    } else if (neg < b_res) {
        b_res = neg;
        if (b_wt % 2 == 0) coef = -coef;
    }
    Monomial m{x_deg, y_deg, g_res, g_wt, b_res, b_wt};
    auto [it, fresh] = terms_.try_emplace(m, coef);
    if (!fresh) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormalPoly& FormalPoly::operator+=(const FormalPoly& o) {
    if (o.n_ != n_ || o.k_ != k_) throw std::invalid_argument("FormalPoly: level or weight mismatch");
    for (const auto& [m, c] : o.terms_) add(m.x_deg, m.y_deg, m.g_res, m.g_wt, m.b_res, m.b_wt, c);
    return *this;
}

FormalPoly& FormalPoly::operator-=(const FormalPoly& o) {
    if (o.n_ != n_ || o.k_ != k_) throw std::invalid_argument("FormalPoly: level or weight mismatch");
    for (const auto& [m, c] : o.terms_) add(m.x_deg, m.y_deg, m.g_res, m.g_wt, m.b_res, m.b_wt, -c);
    return *this;
}

std::string FormalPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        os << (first ? "" : " + ") << c << "*X^" << m.x_deg << "*Y^" << m.y_deg << "*G[" << m.g_res << ","
           << m.g_wt << "]*B[" << m.b_res << "," << m.b_wt << "]";
        first = false;
    }
    return os.str();
}

std::vector<GBTerm> i_terms(long N, long a, long b, int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("i_terms: r and s must be positive");
    std::vector<GBTerm> out{{a, r, b, s, Rational(1)}};
    for (int h = 1; h < r + s; ++h) {
        const int p = r + s - h;
        const Rational ca(Integer((s % 2 ? -1 : 1) * binomial(p - 1, s - 1)));
        const Rational cb(Integer(((p - r) % 2 ? -1 : 1) * binomial(p - 1, r - 1)));
        if (!ca.is_zero()) out.push_back({a, h, a - b, p, ca});
        if (!cb.is_zero()) out.push_back({b, h, a - b, p, cb});
    }
    for (auto& t : out) {
        t.g_res = mod(t.g_res, N);
        t.b_res = mod(t.b_res, N);
    }
    return out;
}

namespace {

// Coefficients of X^i Y^{n-i} in (u X + v Y)^n.
std::vector<Rational> power_of_form(LinearForm l, int n) {
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        out[static_cast<std::size_t>(i)] =
            Rational(Integer(binomial(n, i) * power(l.u, static_cast<unsigned>(i)) * power(l.v, static_cast<unsigned>(n - i))));
    return out;
}

}  // namespace

FormalPoly i_generating(long N, int k, long a, long b, LinearForm l1, LinearForm l2) {
    if (k < 2) throw std::invalid_argument("i_generating: k must be at least 2");
    FormalPoly out(N, k);
    for (int r = 1; r < k; ++r) {
        const int s = k - r;
        const auto p1 = power_of_form(l1, r - 1);
        const auto p2 = power_of_form(l2, s - 1);
        for (const auto& t : i_terms(N, a, b, r, s))
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < s; ++j) {
                    Rational c = t.coef * p1[static_cast<std::size_t>(i)] * p2[static_cast<std::size_t>(j)];
                    out.add(i + j, k - 2 - i - j, t.g_res, t.g_wt, t.b_res, t.b_wt, c);
                }
    }
    return out;
}

IIdentityReport verify_I_identities(long N, int k) {
    if (N < 1) throw std::invalid_argument("verify_I_identities: level must be positive");
    if (k < 2) throw std::invalid_argument("verify_I_identities: k must be at least 2");
    const LinearForm X{1, 0}, Y{0, 1}, XY{1, 1};
    IIdentityReport rep{N, k, {}, true};
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b) {
            FormalPoly product(N, k);
            for (int h = 1; h < k; ++h) {
                const int p = k - h;
                product.add(h - 1, p - 1, a, h, b, p, Rational(1));
                product.add(p - 1, h - 1, b, h, a, p, Rational(1));
            }
            FormalPoly swap = i_generating(N, k, a, b, X, Y);
            swap += i_generating(N, k, b, a, Y, X);
            FormalPoly shift = i_generating(N, k, a + b, a, XY, X);
            shift += i_generating(N, k, a + b, b, XY, Y);
            IIdentityRow row{a, b, swap == product, shift == product};
            rep.pass = rep.pass && row.swap_pass && row.shift_pass;
            rep.rows.push_back(row);
        }
    return rep;
}

}  // namespace eisen
