#include "eisen/bernoulli.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

#include "eisen/arith.hpp"

namespace eisen {

namespace {

constexpr int kEagerDegree = 64;

struct BernoulliTable {
    std::vector<Rational> numbers;  // B_n = B_n(0)
    std::deque<CycPoly> polys;  // deque: references survive growth

    void extend_to(int n) {
        while (static_cast<int>(numbers.size()) <= n) {
            const int m = static_cast<int>(numbers.size());
            // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
            Rational b = m == 0 ? Rational(1) : Rational();
            if (m > 0) {
                Rational s;
                for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * numbers[static_cast<std::size_t>(k)];
                b = -s / Rational(m + 1);
            }
            numbers.push_back(b);
        }
        while (static_cast<int>(polys.size()) <= n) {
            const int m = static_cast<int>(polys.size());
            // B_m(x) = sum_k C(m,k) B_k x^{m-k}
            std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
            for (int k = 0; k <= m; ++k)
                c[static_cast<std::size_t>(m - k)] = Rational(binomial(m, k)) * numbers[static_cast<std::size_t>(k)];
            polys.emplace_back(std::move(c));
        }
    }
};

// The eager range is immutable after construction and read without locking;
// larger degrees go through a locked table of their own.
const BernoulliTable& eager_table() {
    static const BernoulliTable t = [] {
        BernoulliTable b;
        b.extend_to(kEagerDegree);
        return b;
    }();
    return t;
}

}  // namespace

const CycPoly& bernoulli_poly(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli_poly: degree must be non-negative");
    if (n <= kEagerDegree) return eager_table().polys[static_cast<std::size_t>(n)];
    static std::mutex m;
    static BernoulliTable large;
    std::lock_guard lock(m);
    large.extend_to(n);
    return large.polys[static_cast<std::size_t>(n)];
}

Rational bernoulli_number(int n) { return bernoulli_poly(n).coeff(0); }

Rational bernoulli_periodic(int n, const Rational& x) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
    Rational frac = x - Rational(fl);
    if (n == 1 && frac.is_zero()) return Rational();
    return bernoulli_poly(n).eval(frac);
}

CycNum beta_const(long N, long a, int n) {
    if (n < 1) throw std::invalid_argument("beta_const: n must be positive");
    const CycPoly& B = bernoulli_poly(n);
    std::vector<Rational> ga(static_cast<std::size_t>(N));
    for (long l = 1; l <= N; ++l) ga[static_cast<std::size_t>(mod(-l * a, N))] += B.eval(Rational(l, N));
    CycNum s = CycNum::from_group_algebra(N, ga);
    return s * Rational(Integer(-1), Integer(2 * N) * factorial(static_cast<unsigned>(n)));
}

CycNum periodic_bernoulli_sum(long N, long a, int n) {
    std::vector<Rational> ga(static_cast<std::size_t>(N));
    for (long l = 1; l <= N; ++l)
        ga[static_cast<std::size_t>(mod(-l * a, N))] += bernoulli_periodic(n, Rational(l, N));
    return CycNum::from_group_algebra(N, ga);
}

std::vector<CycNum> beta_generating_series(long N, long a, int K) {
    if (K < 1) throw std::invalid_argument("beta_generating_series: K must be positive");
    // exponential series of X/N
    std::vector<Rational> e(static_cast<std::size_t>(K) + 2);
    for (int k = 0; k <= K + 1; ++k) e[static_cast<std::size_t>(k)] = Rational(Integer(1), factorial(static_cast<unsigned>(k)) * power(N, static_cast<unsigned>(k)));

    std::vector<CycNum> out;
    if (mod(a, N) == 0) {
        // w/(w-1) = (N/X) e^{X/N}/h(X) with e^{X/N} - 1 = (X/N) h(X); the pole -1/(2X) cancels.
        std::vector<Rational> h(static_cast<std::size_t>(K) + 2), c(static_cast<std::size_t>(K) + 2);
        // h_j = N^{-j}/(j+1)!
        for (int j = 0; j <= K + 1; ++j) h[static_cast<std::size_t>(j)] = Rational(Integer(1), factorial(static_cast<unsigned>(j + 1)) * power(N, static_cast<unsigned>(j)));
        for (int k = 0; k <= K; ++k) {
            Rational s = e[static_cast<std::size_t>(k)];
            for (int j = 1; j <= k; ++j) s -= h[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
            c[static_cast<std::size_t>(k)] = s;  // h_0 = 1
        }
        for (int k = 0; k < K; ++k) out.emplace_back(N, -c[static_cast<std::size_t>(k) + 1] / Rational(2));
        return out;
    }
    const CycNum root = CycNum::root_power(N, -a);
    std::vector<CycNum> w, d;
    for (int k = 0; k < K; ++k) {
        w.push_back(root * e[static_cast<std::size_t>(k)]);
        d.push_back(w.back());
    }
    d[0] -= CycNum::one(N);
    const CycNum d0_inv = d[0].inv();
    std::vector<CycNum> q;
    for (int k = 0; k < K; ++k) {
        CycNum s = w[static_cast<std::size_t>(k)];
        for (int j = 1; j <= k; ++j) s -= d[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
        q.push_back(s * d0_inv);
    }
    for (auto& x : q) out.push_back(x * Rational(-1, 2 * N));
    return out;
}

BetaGenfunCheck beta_genfun_check(long N, long a, int K) {
    auto series = beta_generating_series(N, a, K);
    for (int k = 1; k <= K; ++k)
        if (!(series[static_cast<std::size_t>(k - 1)] == beta_const(N, a, k))) return {false, k};
    return {true, 0};
}

std::vector<SymmetryCheck> vanish_symmetry_check(long N, int n) {
    if (n < 1) throw std::invalid_argument("vanish_symmetry_check: n must be positive");
    std::vector<SymmetryCheck> out;
    for (long a = 0; a < N; ++a) {
        CycNum s = periodic_bernoulli_sum(N, a, n);
        CycNum conj = s.galois(N == 1 ? 1 : N - 1);
        bool ok = n % 2 == 0 ? conj == s : conj == -s;
        out.push_back({a, ok});
    }
    return out;
}

}  // namespace eisen
