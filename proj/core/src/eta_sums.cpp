#include "eisen/eta_sums.hpp"

#include <stdexcept>

namespace eisen {

namespace {

std::vector<PrimePower> checked_factorization(long N, const std::vector<int>& alpha,
                                              const std::vector<int>& ell) {
    if (N < 2) throw std::invalid_argument("eta_block_sum: level must be at least 2");
    auto fac = factorize(N);
    if (alpha.size() != fac.size() || ell.size() != fac.size())
        throw std::invalid_argument("eta_block_sum: exponent vectors must match the factorization of N");
    bool all_top = true;
    for (std::size_t t = 0; t < fac.size(); ++t) {
        if (alpha[t] < 0 || alpha[t] > fac[t].k)
            throw std::invalid_argument("eta_block_sum: alpha out of range");
        if (ell[t] < 0) throw std::invalid_argument("eta_block_sum: ell must be non-negative");
        all_top = all_top && alpha[t] == fac[t].k;
    }
    if (all_top) throw std::invalid_argument("eta_block_sum: alpha = (k_1,...,k_r) is excluded");
    return fac;
}

}  // namespace

CycNum eta_block_sum(long N, const std::vector<int>& alpha, const std::vector<int>& ell) {
    auto fac = checked_factorization(N, alpha, ell);
    long mult = 1;
    for (std::size_t t = 0; t < fac.size(); ++t)
        for (int i = 0; i < ell[t]; ++i) mult = mod(mult * fac[t].p, N);

    std::vector<Integer> buckets(static_cast<std::size_t>(N));
    for (long j = 1; j < N; ++j) {
        bool in_block = true;
        for (std::size_t t = 0; t < fac.size() && in_block; ++t)
            in_block = std::min(valuation(j, fac[t].p), fac[t].k) == alpha[t];
        if (in_block) buckets[static_cast<std::size_t>(mod(j * mult, N))] += 1;
    }
    return CycNum::from_group_algebra(N, buckets);
}

Rational eta_block_sum_closed_form(long N, const std::vector<int>& alpha, const std::vector<int>& ell) {
    auto fac = checked_factorization(N, alpha, ell);
    Integer value = 1;
    for (std::size_t t = 0; t < fac.size(); ++t) {
        const int gap = fac[t].k - alpha[t];
        if (ell[t] <= gap - 2) return Rational(0);
        if (ell[t] == gap - 1)
            value *= -ipow(fac[t].p, ell[t]);
        else
            value *= euler_phi(ipow(fac[t].p, gap));
    }
    return Rational(value);
}

}  // namespace eisen
