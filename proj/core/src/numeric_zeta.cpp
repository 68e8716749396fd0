#include "eisen/numeric_zeta.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "eisen/arith.hpp"
#include "eisen/bernoulli.hpp"
#include "eisen/rational.hpp"

namespace eisen {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// |B_6| / 6!, the Euler-Maclaurin remainder constant after the g''' term.
constexpr double kEmRemainder = (1.0 / 42.0) / 720.0;

// Neumaier compensated sum.
struct CompensatedSum {
    double sum = 0, comp = 0;
    void add(double x) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Rounding bound from a cutoff-independent majorant of the sum of |terms|, so
// that the reported bound is monotone in the cutoff. pow() contributes about
// one ulp per term on top of the compensated summation error.
double rounding_bound(double majorant) { return 8 * kEps * majorant; }

// Representative of a mod N in 1..N.
long positive_rep(long a, long N) {
    const long r = mod(a, N);
    return r == 0 ? N : r;
}

struct Tail {
    double value;
    double bound;
};

// sum_{m >= 0} sum_t coef_t (x_t + N m)^{-n} by Euler-Maclaurin from m = 0,
// keeping g/2, g'/12 and g'''/720. For n = 1 the coefficients must sum to zero.
Tail em_tail(long N, int n, std::initializer_list<std::pair<double, double>> parts) {
    const double Nd = static_cast<double>(N);
    double integral = 0, boundary = 0, bound = 0, coef_sum = 0;
    for (const auto& [x, c] : parts) {
        coef_sum += c;
        integral += n == 1 ? -c * std::log(x) / Nd : c * std::pow(x, 1.0 - n) / (Nd * (n - 1));
        const double g0 = std::pow(x, -n);
        const double g1 = -n * Nd * g0 / x;
        const double g3 = -n * (n + 1.0) * (n + 2.0) * Nd * Nd * Nd * g0 / (x * x * x);
        boundary += c * (g0 / 2 - g1 / 12 + g3 / 720);
        const double g5 = n * (n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0) * std::pow(Nd, 5) * g0 / std::pow(x, 5);
        bound += std::abs(c) * kEmRemainder * g5;
    }
    if (n == 1 && std::abs(coef_sum) > 0) throw std::logic_error("em_tail: divergent combination");
    return {integral + boundary, bound};
}

// x^{-n}
double ipow_d(double x, int n) { return std::pow(x, -n); }

}  // namespace

NumericValue zeta_numeric_cutoff(long N, long a, int s, long T) {
    if (N < 1) throw std::invalid_argument("zeta_numeric: level must be positive");
    if (s < 2) throw std::invalid_argument("zeta_numeric: s must be at least 2");
    if (T < 1) throw std::invalid_argument("zeta_numeric: cutoff must be positive");
    const double x0 = static_cast<double>(positive_rep(a, N)), Nd = static_cast<double>(N);
    CompensatedSum sum;
    for (long m = 0; m < T; ++m) sum.add(ipow_d(x0 + Nd * static_cast<double>(m), s));
    const Tail tail = em_tail(N, s, {{x0 + Nd * static_cast<double>(T), 1.0}});
    sum.add(tail.value);
    const double majorant = std::pow(x0, -s) + std::pow(x0, 1.0 - s) / (Nd * (s - 1));
    return {sum.value(), tail.bound + rounding_bound(majorant)};
}

NumericValue zeta_numeric(long N, long a, int s, double tol) {
    for (long T = 16;; T *= 2) {
        NumericValue v = zeta_numeric_cutoff(N, a, s, T);
        if (v.error_bound <= tol || 2 * T > kMaxTerms) return v;
    }
}

NumericValue double_zeta_numeric_cutoff(long N, long a, long b, int r, int s, long X) {
    if (N < 1) throw std::invalid_argument("double_zeta_numeric: level must be positive");
    if (r < 2 || s < 1) throw std::invalid_argument("double_zeta_numeric: need r >= 2 and s >= 1 for convergence");
    if (X < 1) throw std::invalid_argument("double_zeta_numeric: cutoff must be positive");
    a = mod(a, N);
    b = mod(b, N);
    CompensatedSum outer, inner;
    long res = 1 % N;  // n mod N
    for (long n = 1; n <= X; ++n) {
        if (res == a) outer.add(ipow_d(static_cast<double>(n), r) * inner.value());
        if (res == b) inner.add(ipow_d(static_cast<double>(n), s));
        res = res + 1 == N ? 0 : res + 1;
    }
    const double Nd = static_cast<double>(N), Xd = static_cast<double>(X);
    // n1 > X: first the inner part up to X, then the region X < n2 < n1.
    const long first_a = X + 1 + mod(a - (X + 1), N);
    const Tail tail_a = em_tail(N, r, {{static_cast<double>(first_a), 1.0}});
    const double inner_x = inner.value();
    const double region = s == 1 ? std::pow(Xd, 1.0 - r) / ((r - 1.0) * (r - 1.0))
                                 : std::pow(Xd, 2.0 - r - s) / ((r - 1.0) * (r + s - 2.0));
    const double corr = region / (Nd * Nd);
    outer.add(inner_x * tail_a.value);
    outer.add(corr);
    // sum_n n^{-r} (1 + log n) <= zeta(2) + 0.94 < 3 majorizes every term sum for r >= 2, s >= 1
    const double bound = inner_x * tail_a.bound + std::abs(corr) * 4 * Nd / Xd + rounding_bound(3.0);
    return {outer.value(), bound};
}

NumericValue double_zeta_numeric(long N, long a, long b, int r, int s, double tol) {
    for (long X = 1024;; X *= 2) {
        NumericValue v = double_zeta_numeric_cutoff(N, a, b, r, s, X);
        if (v.error_bound <= tol || 2 * X > kMaxTerms) return v;
    }
}

DbsfCheck verify_dbsf_numeric(long N, long a, long b, int r, int s, double tol) {
    if (r < 2 || s < 2) throw std::invalid_argument("verify_dbsf_numeric: need r, s >= 2");
    const double inner_tol = tol / 50;
    const NumericValue za = zeta_numeric(N, a, r, inner_tol), zb = zeta_numeric(N, b, s, inner_tol);
    const double product = za.value.real() * zb.value.real();
    const double product_bound = std::abs(za.value.real()) * zb.error_bound +
                                 std::abs(zb.value.real()) * za.error_bound + za.error_bound * zb.error_bound;

    double st = 0, st_bound = product_bound;
    for (const NumericValue& v : {double_zeta_numeric(N, a, b, r, s, inner_tol), double_zeta_numeric(N, b, a, s, r, inner_tol)}) {
        st += v.value.real();
        st_bound += v.error_bound;
    }
    if (mod(a - b, N) == 0) {
        const NumericValue v = zeta_numeric(N, a, r + s, inner_tol);
        st += v.value.real();
        st_bound += v.error_bound;
    }

    double sh = 0, sh_bound = product_bound;
    for (int i = 2; i < r + s; ++i) {
        const int j = r + s - i;
        const double c1 = binomial(i - 1, r - 1).get_d(), c2 = binomial(i - 1, s - 1).get_d();
        if (c1 != 0) {
            const NumericValue v = double_zeta_numeric(N, a + b, b, i, j, inner_tol);
            sh += c1 * v.value.real();
            sh_bound += c1 * v.error_bound;
        }
        if (c2 != 0) {
            const NumericValue v = double_zeta_numeric(N, a + b, a, i, j, inner_tol);
            sh += c2 * v.value.real();
            sh_bound += c2 * v.error_bound;
        }
    }
    DbsfCheck c{N, mod(a, N), mod(b, N), r, s, product, product - st, st_bound, product - sh, sh_bound, false, false};
    c.stuffle_pass = std::abs(c.stuffle_residual) <= c.stuffle_bound + tol;
    c.shuffle_pass = std::abs(c.shuffle_residual) <= c.shuffle_bound + tol;
    return c;
}

NumericValue frakz_numeric_cutoff(long N, long a, int n, long T) {
    if (N < 1) throw std::invalid_argument("frakz_numeric: level must be positive");
    if (n < 1) throw std::invalid_argument("frakz_numeric: n must be positive");
    if (T < 1) throw std::invalid_argument("frakz_numeric: cutoff must be positive");
    // positive k = x1 + N m, negative k = -(x2 + N m)
    const double x1 = static_cast<double>(positive_rep(a, N)), x2 = static_cast<double>(positive_rep(-a, N));
    const double sgn = n % 2 == 0 ? 1.0 : -1.0, Nd = static_cast<double>(N);
    CompensatedSum sum;
    double majorant;
    if (n == 1) {
        // paired terms (x2 - x1) / ((x1 + Nm)(x2 + Nm)) stay summable
        for (long m = 0; m < T; ++m) {
            const double md = Nd * static_cast<double>(m);
            sum.add((x2 - x1) / ((x1 + md) * (x2 + md)));
        }
        majorant = std::abs(x2 - x1) * (1 / (x1 * x2) + 1 / (Nd * std::min(x1, x2)));
    } else {
        for (long m = 0; m < T; ++m) {
            const double md = Nd * static_cast<double>(m);
            sum.add(ipow_d(x1 + md, n) + sgn * ipow_d(x2 + md, n));
        }
        majorant = 0;
        for (double x : {x1, x2}) majorant += std::pow(x, -n) + std::pow(x, 1.0 - n) / (Nd * (n - 1));
    }
    const double xt = Nd * static_cast<double>(T);
    const Tail tail = em_tail(N, n, {{x1 + xt, 1.0}, {x2 + xt, sgn}});
    sum.add(tail.value);
    return {sum.value() / 2, (tail.bound + rounding_bound(majorant)) / 2};
}

NumericValue frakz_numeric(long N, long a, int n, double tol) {
    for (long T = 16;; T *= 2) {
        NumericValue v = frakz_numeric_cutoff(N, a, n, T);
        if (v.error_bound <= tol || 2 * T > kMaxTerms) return v;
    }
}

std::complex<double> frakz_bernoulli(long N, long a, int n) {
    if (n < 1) throw std::invalid_argument("frakz_bernoulli: n must be positive");
    const std::complex<double> two_pi_i(0, 2 * std::numbers::pi);
    const double scale = -1.0 / (2.0 * static_cast<double>(N) * factorial(static_cast<unsigned>(n)).get_d());
    return scale * std::pow(two_pi_i, n) * periodic_bernoulli_sum(N, a, n).to_complex();
}

FrakzCheck frakz_vs_bernoulli(long N, long a, int n, double tol) {
    FrakzCheck c{N, mod(a, N), n, frakz_numeric(N, a, n, tol / 10), frakz_bernoulli(N, a, n), 0, false};
    c.difference = std::abs(c.numeric.value - c.bernoulli);
    c.pass = c.difference <= c.numeric.error_bound + tol;
    return c;
}

ReflectionCheck reflection_check(long N, long a, int n, double tol) {
    if (n < 2) throw std::invalid_argument("reflection_check: n must be at least 2");
    const NumericValue z = frakz_numeric(N, a, n, tol / 10);
    const NumericValue zp = zeta_numeric(N, a, n, tol / 10), zm = zeta_numeric(N, -a, n, tol / 10);
    const double sgn = n % 2 == 0 ? 1.0 : -1.0;
    const double rhs = (zp.value.real() + sgn * zm.value.real()) / 2;
    ReflectionCheck c{N, mod(a, N), n, std::abs(z.value.real() - rhs), false};
    c.pass = c.difference <= z.error_bound + (zp.error_bound + zm.error_bound) / 2 + tol;
    return c;
}

SignProbeRow gbtz_sign_probe(long N, long a, double tol, int max_n) {
    const std::complex<double> two_pi_i(0, 2 * std::numbers::pi);
    SignProbeRow row{mod(a, N), beta_const(N, a, 1).to_complex(), {}, '?', true, 0};
    const NumericValue z1 = frakz_numeric(N, a, 1, tol / 10);
    row.scaled_frakz1 = z1.value / two_pi_i;
    const double shift = 1.0 / (4.0 * static_cast<double>(N));
    const double slack = z1.error_bound / (2 * std::numbers::pi) + tol;
    const bool plus = std::abs(row.beta1 - row.scaled_frakz1 - shift) <= slack;
    const bool minus = std::abs(row.beta1 - row.scaled_frakz1 + shift) <= slack;
    if (plus != minus) row.sign = plus ? '+' : '-';
    for (int n = 2; n <= max_n; ++n) {
        const NumericValue zn = frakz_numeric(N, a, n, tol / 10);
        const std::complex<double> scaled = zn.value / std::pow(two_pi_i, n);
        const double bound = zn.error_bound / std::pow(2 * std::numbers::pi, n) + tol;
        if (std::abs(beta_const(N, a, n).to_complex() - scaled) > bound) {
            row.higher_pass = false;
            row.first_bad_n = n;
            break;
        }
    }
    return row;
}

SignProbe gbtz_sign_probe(long N, double tol, int max_n) {
    SignProbe p{N, {}, false, '?'};
    for (long a = 0; a < N; ++a) p.rows.push_back(gbtz_sign_probe(N, a, tol, max_n));
    char seen = 0;
    bool agree = true;
    for (const auto& r : p.rows) {
        if (r.sign == '?') p.anomaly = true;
        if (seen == 0) seen = r.sign;
        agree = agree && r.sign == seen;
    }
    if (agree && !p.anomaly) p.consensus = seen;
    return p;
}

NumericValue polylog_root_of_unity(long N, long beta, int s, double tol) {
    if (s < 2) throw std::invalid_argument("polylog_root_of_unity: s must be at least 2");
    // tail sum_{n > K} n^{-s} <= K^{1-s} / (s-1)
    const double K_needed = std::pow(1.0 / ((s - 1) * tol), 1.0 / (s - 1));
    const long K = std::min<long>(kMaxTerms, static_cast<long>(std::ceil(K_needed)));
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(N));
    for (long j = 0; j < N; ++j)
        roots[static_cast<std::size_t>(j)] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(N));
    CompensatedSum re, im;
    const long step = mod(beta, N);
    long e = 0;
    for (long n = 1; n <= K; ++n) {
        e = e + step >= N ? e + step - N : e + step;
        const double w = ipow_d(static_cast<double>(n), s);
        re.add(w * roots[static_cast<std::size_t>(e)].real());
        im.add(w * roots[static_cast<std::size_t>(e)].imag());
    }
    // sum n^{-s} <= zeta(2) < 2 bounds each coordinate's term magnitudes
    const double bound = std::pow(static_cast<double>(K), 1.0 - s) / (s - 1) + 2 * rounding_bound(2.0);
    return {{re.value(), im.value()}, bound};
}

PolylogCheck polylog_consistency(long N, long a, int s, double tol) {
    const NumericValue z = zeta_numeric(N, a, s, tol / 10);
    std::complex<double> acc = 0;
    double bound = 0;
    for (long beta = 0; beta < N; ++beta) {
        const NumericValue li = polylog_root_of_unity(N, beta, s, tol / 2);
        const double angle = -2 * std::numbers::pi * static_cast<double>(mod(beta * a, N)) / static_cast<double>(N);
        acc += std::polar(1.0, angle) * li.value;
        bound += li.error_bound;
    }
    acc /= static_cast<double>(N);
    bound /= static_cast<double>(N);
    PolylogCheck c{N, mod(a, N), s, std::abs(acc - z.value), bound + z.error_bound, false};
    c.pass = c.difference <= c.bound + tol;
    return c;
}

}  // namespace eisen
