#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "eisen/qseries.hpp"
#include "eisen/symbols.hpp"

namespace eisen {

// q-expansions normalized by (2 pi i)^{-weight}. Every series built from
// divisor sums has zero constant term.

struct PsiSeries {
    QSeries series;
    Rational dropped_constant;  // -1/(2N) for s = 1, else 0
};

// Coefficient of q^n: (-1)^s / (N^s (s-1)!) n^{s-1} eta^{a n}.
PsiSeries psi_tilde_series(long N, long a, int s, int M);

// Depth 1 or 2. Coefficient of q^m:
//   (-1)^{|s|} / (N^{|s|} prod (s_j-1)!) * sigma_multi(N, a, s-1, m).
QSeries g_tilde_series(long N, const std::vector<long>& a, const std::vector<int>& s, int M);
QSeries g_tilde_series(long N, long a, int s, int M);

// Coefficient of q^m: (-1)^k / (N^{k+1} k!) sum_{n u = m} n u^k eta^{a u}.
QSeries g_tilde_prime_series(long N, long a, int k, int M);

// Coefficient of q^m: kappa1(N, a, m) / N^2.
QSeries f2_series(long N, long a, int M);

// Memoized read-mostly store of the series above at one (level, truncation).
// Safe to share between threads.
class SeriesCache {
public:
    SeriesCache(long N, int M) : n_(N), m_(M) {}

    long level() const { return n_; }
    int truncation() const { return m_; }

    const QSeries& g(long a, int s);
    const QSeries& g2(long a, long b, int r, int s);
    const QSeries& g_prime(long a, int k);
    const QSeries& f2(long a);
    const QSeries& zero();

private:
    using Key = std::tuple<int, long, long, int, int>;
    template <class Make>
    const QSeries& lookup(const Key& key, Make make);

    long n_;
    int m_;
    std::shared_mutex mu_;
    std::map<Key, QSeries> store_;
};

// Substitutes F_a -> f_2^a and G_a -> g~_2^a.
QSeries symbolvec_to_series(const SymbolVec& v, int M);
QSeries symbolvec_to_series(const SymbolVec& v, SeriesCache& cache);

}  // namespace eisen
