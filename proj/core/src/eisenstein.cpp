#include "eisen/eisenstein.hpp"

#include <stdexcept>

#include "eisen/arith.hpp"

namespace eisen {

namespace {

Integer ipow_z(long base, int exp) { return power(base, static_cast<unsigned>(exp)); }

// (-1)^w / (N^w * prod (s_j - 1)!)
Rational normalizer(long N, const std::vector<int>& s) {
    int w = 0;
    Integer den = 1;
    for (int x : s) {
        w += x;
        den *= factorial(static_cast<unsigned>(x - 1));
    }
    den *= ipow_z(N, w);
    return Rational(Integer(w % 2 ? -1 : 1), den);
}

QSeries from_buckets(long N, int M, const std::vector<std::vector<Integer>>& buckets, const Rational& scale) {
    QSeries out(N, M);
    for (int m = 1; m <= M; ++m) {
        CycNum c = CycNum::from_group_algebra(N, buckets[static_cast<std::size_t>(m)]);
        if (!c.is_zero()) out[m] = c * scale;
    }
    return out;
}

std::vector<std::vector<Integer>> empty_buckets(long N, int M) {
    return std::vector<std::vector<Integer>>(static_cast<std::size_t>(M) + 1,
                                             std::vector<Integer>(static_cast<std::size_t>(N)));
}

}  // namespace

PsiSeries psi_tilde_series(long N, long a, int s, int M) {
    if (s < 1) throw std::invalid_argument("psi_tilde_series: s must be positive");
    auto buckets = empty_buckets(N, M);
    for (long n = 1; n <= M; ++n)
        buckets[static_cast<std::size_t>(n)][static_cast<std::size_t>(mod(a * n, N))] += ipow_z(n, s - 1);
    PsiSeries out{from_buckets(N, M, buckets, normalizer(N, {s})), Rational()};
    if (s == 1) out.dropped_constant = Rational(-1, 2 * N);
    return out;
}

QSeries g_tilde_series(long N, const std::vector<long>& a, const std::vector<int>& s, int M) {
    if (a.size() != s.size() || a.empty()) throw std::invalid_argument("g_tilde_series: bad index vectors");
    if (a.size() > 2) throw std::invalid_argument("g_tilde_series: depth > 2 is not supported");
    for (int x : s)
        if (x < 1) throw std::invalid_argument("g_tilde_series: exponents must be positive");
    auto buckets = empty_buckets(N, M);
    if (a.size() == 1) {
        for (long u = 1; u <= M; ++u)
            for (long v = 1; u * v <= M; ++v)
                buckets[static_cast<std::size_t>(u * v)][static_cast<std::size_t>(mod(a[0] * v, N))] +=
                    ipow_z(v, s[0] - 1);
    } else {
        // u1 > u2 > 0
        for (long u2 = 1; u2 < M; ++u2)
            for (long u1 = u2 + 1; u1 + u2 <= M; ++u1)
                for (long v1 = 1; u1 * v1 + u2 <= M; ++v1) {
                    const Integer w1 = ipow_z(v1, s[0] - 1);
                    for (long v2 = 1; u1 * v1 + u2 * v2 <= M; ++v2)
                        buckets[static_cast<std::size_t>(u1 * v1 + u2 * v2)]
                               [static_cast<std::size_t>(mod(a[0] * v1 + a[1] * v2, N))] += w1 * ipow_z(v2, s[1] - 1);
                }
    }
    return from_buckets(N, M, buckets, normalizer(N, s));
}

QSeries g_tilde_series(long N, long a, int s, int M) { return g_tilde_series(N, std::vector<long>{a}, {s}, M); }

QSeries g_tilde_prime_series(long N, long a, int k, int M) {
    if (k < 0) throw std::invalid_argument("g_tilde_prime_series: k must be non-negative");
    auto buckets = empty_buckets(N, M);
    for (long u = 1; u <= M; ++u)
        for (long n = 1; n * u <= M; ++n)
            buckets[static_cast<std::size_t>(n * u)][static_cast<std::size_t>(mod(a * u, N))] += n * ipow_z(u, k);
    Integer den = factorial(static_cast<unsigned>(k)) * ipow_z(N, k + 1);
    return from_buckets(N, M, buckets, Rational(Integer(k % 2 ? -1 : 1), den));
}

QSeries f2_series(long N, long a, int M) {
    auto buckets = empty_buckets(N, M);
    for (long u = 1; u <= M; ++u)
        for (long n = 1; n * u <= M; ++n)
            buckets[static_cast<std::size_t>(n * u)][static_cast<std::size_t>(mod(a * u, N))] += n;
    return from_buckets(N, M, buckets, Rational(1, N * N));
}

// ---------------------------------------------------------------------------
// SeriesCache

template <class Make>
const QSeries& SeriesCache::lookup(const Key& key, Make make) {
    {
        std::shared_lock lock(mu_);
        if (auto it = store_.find(key); it != store_.end()) return it->second;
    }
    QSeries value = make();
    std::unique_lock lock(mu_);
    return store_.emplace(key, std::move(value)).first->second;
}

const QSeries& SeriesCache::g(long a, int s) {
    a = mod(a, n_);
    return lookup({0, a, 0, s, 0}, [&] { return g_tilde_series(n_, a, s, m_); });
}

const QSeries& SeriesCache::g2(long a, long b, int r, int s) {
    a = mod(a, n_);
    b = mod(b, n_);
    return lookup({1, a, b, r, s}, [&] { return g_tilde_series(n_, std::vector<long>{a, b}, {r, s}, m_); });
}

const QSeries& SeriesCache::g_prime(long a, int k) {
    a = mod(a, n_);
    return lookup({2, a, 0, k, 0}, [&] { return g_tilde_prime_series(n_, a, k, m_); });
}

const QSeries& SeriesCache::f2(long a) {
    a = mod(a, n_);
    return lookup({3, a, 0, 0, 0}, [&] { return f2_series(n_, a, m_); });
}

const QSeries& SeriesCache::zero() {
    return lookup({4, 0, 0, 0, 0}, [&] { return QSeries(n_, m_); });
}

QSeries symbolvec_to_series(const SymbolVec& v, SeriesCache& cache) {
    const long N = v.level();
    if (cache.level() != N) throw std::invalid_argument("symbolvec_to_series: cache level mismatch");
    QSeries out(N, cache.truncation());
    for (long a = 0; a < N; ++a) {
        if (!v.f(a).is_zero()) out.add_scaled(cache.f2(a), v.f(a));
        if (a > 0 && !v.g(a).is_zero()) out.add_scaled(cache.g(a, 2), v.g(a));
    }
    return out;
}

QSeries symbolvec_to_series(const SymbolVec& v, int M) {
    SeriesCache cache(v.level(), M);
    return symbolvec_to_series(v, cache);
}

}  // namespace eisen
