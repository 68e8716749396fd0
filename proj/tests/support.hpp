#pragma once

#include <complex>
#include <random>

#include "eisen/cyclotomic.hpp"

namespace eisen::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed'e15e);
    return gen;
}

inline Rational random_rational(int span = 9) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    return Rational(num(rng()), den(rng()));
}

// Random element as a combination of roots of unity, so every power participates.
inline CycNum random_cyc(long N, int span = 9) {
    std::vector<Rational> c(static_cast<std::size_t>(N));
    for (auto& x : c) x = random_rational(span);
    return CycNum::from_group_algebra(N, c);
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
    return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

inline std::complex<double> root(long N, long k) {
    const double t = 2 * 3.14159265358979323846 * static_cast<double>(k) / static_cast<double>(N);
    return {std::cos(t), std::sin(t)};
}

}  // namespace eisen::test
