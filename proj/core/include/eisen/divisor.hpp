#pragma once

#include <vector>

#include "eisen/cyclotomic.hpp"
#include "eisen/symbols.hpp"

namespace eisen {

// Multiple divisor function at level N:
//   sum over u_1 > ... > u_d > 0, v_j >= 1, sum u_j v_j = m
//   of eta^{sum a_j v_j} prod v_j^{s_j}.
// Direct enumeration; zero when m < d(d+1)/2.
CycNum sigma_multi(long N, const std::vector<long>& a, const std::vector<int>& s, long m);

// Group-algebra form of sigma_multi: entry e is the integer coefficient of eta^e.
std::vector<Integer> sigma_multi_buckets(long N, const std::vector<long>& a, const std::vector<int>& s, long m);

// sum_{n u = m} eta^{a u} n
CycNum kappa1(long N, long a, long m);

struct DivisorIdentityCheck {
    bool pass;
    CycNum lhs;
    CycNum rhs;
};

// Compares, for N >= 2,
//   sum_{gcd(j,N)=1} sigma_1^j(m) - phi(N) sigma_1^0(m)
// with the inclusion pattern sum over subsets I of the prime divisors of N of
//   prod_{t in I} phi(p_t^{k_t}) prod_{t not in I} p_t^{k_t} * sum kappa_1^j(m),
// the inner sum over 1 <= j < N divisible exactly by the primes in I.
DivisorIdentityCheck verify_divisor_identity(long N, long m);

// The same identity as a vanishing combination of F_a = f_2^a and G_a = g~_2^a.
SymbolVec divisor_identity_symbols(long N);

}  // namespace eisen
