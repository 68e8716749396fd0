#include "eisen/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eisen {

std::vector<PrimePower> factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<PrimePower> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.push_back({p, k});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

long ipow(long base, int exp) {
    long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

long euler_phi(long n) {
    long r = n;
    for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
    return r;
}

long num_divisors(long n) {
    long r = 1;
    for (auto [p, k] : factorize(n)) r *= k + 1;
    return r;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long gcd(long a, long b) { return std::gcd(a, b); }

long gcd_level(long a, long n) {
    long r = mod(a, n);
    return std::gcd(r == 0 ? n : r, n);
}

long gcd_level(long a, long b, long n) {
    long ra = mod(a, n), rb = mod(b, n);
    return std::gcd(std::gcd(ra == 0 ? n : ra, rb == 0 ? n : rb), n);
}

int valuation(long x, long p) {
    if (x == 0) throw std::invalid_argument("valuation of zero");
    int v = 0;
    x = x < 0 ? -x : x;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace eisen
