#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace eisen {

struct PrimePower {
    long p;
    int k;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Non-negative residue of x modulo n (n >= 1).
inline long mod(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(long n);

long ipow(long base, int exp);
long euler_phi(long n);
// Number of positive divisors.
long num_divisors(long n);
std::vector<long> divisors(long n);

long gcd(long a, long b);
// gcd with residues taken in 1..n: a residue 0 stands for n itself.
long gcd_level(long a, long n);
long gcd_level(long a, long b, long n);

// p-adic valuation of x != 0.
int valuation(long x, long p);

}  // namespace eisen
