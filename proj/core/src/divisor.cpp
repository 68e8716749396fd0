#include "eisen/divisor.hpp"

#include <stdexcept>

#include "eisen/arith.hpp"

namespace eisen {

namespace {

struct SigmaEnumerator {
    long N;
    const std::vector<long>& a;
    const std::vector<int>& s;
    std::vector<Integer>& buckets;

    // Chooses (u_j, v_j) for j = depth-1 down to 0 with u increasing, so that the
    // smallest u is placed first; `floor` is the exclusive lower bound for u_j.
    void run(std::size_t j, long remaining, long floor, long eta_exp, const Integer& weight) {
        const std::size_t d = a.size();
        // indices filled from the last one backwards
        const std::size_t idx = d - 1 - j;
        if (j == d) {
            if (remaining == 0) buckets[static_cast<std::size_t>(mod(eta_exp, N))] += weight;
            return;
        }
        const long left = static_cast<long>(d - j - 1);  // how many larger u still to place
        for (long u = floor + 1;; ++u) {
            // the remaining larger u's are at least u+1, ..., u+left with v >= 1
            long min_rest = 0;
            for (long t = 1; t <= left; ++t) min_rest += u + t;
            if (u + min_rest > remaining) break;
            for (long v = 1; u * v + min_rest <= remaining; ++v) {
                Integer w = weight;
                if (s[idx] > 0) {
                    Integer pv;
                    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(s[idx]));
                    w *= pv;
                }
                run(j + 1, remaining - u * v, u, eta_exp + a[idx] * v, w);
            }
        }
    }
};

}  // namespace

std::vector<Integer> sigma_multi_buckets(long N, const std::vector<long>& a, const std::vector<int>& s, long m) {
    if (a.empty()) throw std::invalid_argument("sigma_multi: depth must be at least 1");
    if (a.size() != s.size()) throw std::invalid_argument("sigma_multi: residue and exponent vectors differ in length");
    if (m < 1) throw std::invalid_argument("sigma_multi: m must be positive");
    for (int e : s)
        if (e < 0) throw std::invalid_argument("sigma_multi: exponents must be non-negative");
    std::vector<Integer> buckets(static_cast<std::size_t>(N));
    SigmaEnumerator en{N, a, s, buckets};
    en.run(0, m, 0, 0, Integer(1));
    return buckets;
}

CycNum sigma_multi(long N, const std::vector<long>& a, const std::vector<int>& s, long m) {
    return CycNum::from_group_algebra(N, sigma_multi_buckets(N, a, s, m));
}

CycNum kappa1(long N, long a, long m) {
    if (m < 1) throw std::invalid_argument("kappa1: m must be positive");
    std::vector<Integer> buckets(static_cast<std::size_t>(N));
    for (long u = 1; u <= m; ++u)
        if (m % u == 0) buckets[static_cast<std::size_t>(mod(a * u, N))] += m / u;
    return CycNum::from_group_algebra(N, buckets);
}

namespace {

// Weight attached to residue j by the subset I(j) = {t : p_t | j}.
Integer subset_weight(const std::vector<PrimePower>& fac, unsigned mask) {
    Integer w = 1;
    for (std::size_t t = 0; t < fac.size(); ++t) {
        long pk = ipow(fac[t].p, fac[t].k);
        w *= (mask >> t & 1u) ? euler_phi(pk) : pk;
    }
    return w;
}

unsigned divisibility_mask(const std::vector<PrimePower>& fac, long j) {
    unsigned mask = 0;
    for (std::size_t t = 0; t < fac.size(); ++t)
        if (j % fac[t].p == 0) mask |= 1u << t;
    return mask;
}

}  // namespace

DivisorIdentityCheck verify_divisor_identity(long N, long m) {
    if (N < 2) throw std::invalid_argument("verify_divisor_identity: level must be at least 2");
    if (m < 1) throw std::invalid_argument("verify_divisor_identity: m must be positive");
    auto fac = factorize(N);
    const auto n = static_cast<std::size_t>(N);

    std::vector<Integer> lhs(n), rhs(n);
    // sigma_1^j(m) = sum_{n u = m} eta^{j u} u, kappa_1^j(m) = sum eta^{j u} n
    for (long j = 0; j < N; ++j) {
        const bool unit = j != 0 && gcd(j, N) == 1;
        if (!unit && j != 0) continue;
        for (long u = 1; u <= m; ++u) {
            if (m % u) continue;
            auto slot = static_cast<std::size_t>(mod(j * u, N));
            if (unit)
                lhs[slot] += u;
            else
                lhs[slot] -= Integer(euler_phi(N)) * u;
        }
    }
    for (unsigned mask = 0; mask < (1u << fac.size()); ++mask) {
        const Integer w = subset_weight(fac, mask);
        for (long j = 1; j < N; ++j) {
            if (divisibility_mask(fac, j) != mask) continue;
            for (long u = 1; u <= m; ++u)
                if (m % u == 0) rhs[static_cast<std::size_t>(mod(j * u, N))] += w * (m / u);
        }
    }
    CycNum l = CycNum::from_group_algebra(N, lhs);
    CycNum r = CycNum::from_group_algebra(N, rhs);
    const bool pass = l == r;
    return {pass, std::move(l), std::move(r)};
}

SymbolVec divisor_identity_symbols(long N) {
    if (N < 2) throw std::invalid_argument("divisor_identity_symbols: level must be at least 2");
    auto fac = factorize(N);
    SymbolVec v(N);
    v.f(0) = -Rational(euler_phi(N));
    for (long j = 1; j < N; ++j) {
        if (gcd(j, N) == 1) v.g(j) += 1;
        v.f(j) -= Rational(subset_weight(fac, divisibility_mask(fac, j)));
    }
    return v;
}

}  // namespace eisen
