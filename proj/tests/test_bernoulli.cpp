#include <numbers>

#include "doctest.h"
#include "eisen/arith.hpp"
#include "eisen/bernoulli.hpp"
#include "support.hpp"

using namespace eisen;

namespace {

Rational binom(int n, int k) {
    Rational r(1);
    for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
    return r;
}

// sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1 (so B_1 = -1/2).
std::vector<Rational> bernoulli_table(int n) {
    std::vector<Rational> b{Rational(1)};
    for (int m = 1; m <= n; ++m) {
        Rational s;
        for (int k = 0; k < m; ++k) s += binom(m + 1, k) * b[static_cast<std::size_t>(k)];
        b.push_back(-s / Rational(m + 1));
    }
    return b;
}

Rational eval_oracle(int n, const Rational& x) {
    const auto b = bernoulli_table(n);
    Rational s, xp(1);
    for (int k = n; k >= 0; --k) {
        s += binom(n, k) * b[static_cast<std::size_t>(k)] * xp;
        xp *= x;
    }
    return s;
}

}  // namespace

TEST_CASE("Bernoulli polynomials against the binomial recurrence") {
    CHECK(bernoulli_poly(4).eval(Rational(0)) == Rational(-1, 30));
    CHECK(bernoulli_poly(1).eval(Rational(0)) == Rational(-1, 2));
    const auto b = bernoulli_table(30);
    for (int n = 0; n <= 30; ++n) {
        CHECK(bernoulli_number(n) == b[static_cast<std::size_t>(n)]);
        for (const Rational x : {Rational(0), Rational(1, 3), Rational(5, 7), Rational(1)})
            CHECK(bernoulli_poly(n).eval(x) == eval_oracle(n, x));
    }
    CHECK_THROWS_AS(bernoulli_poly(-1), std::invalid_argument);
}

TEST_CASE("periodic Bernoulli function") {
    CHECK(bernoulli_periodic(1, Rational(3)).is_zero());
    CHECK(bernoulli_periodic(1, Rational(5, 4)) == Rational(-1, 4));
    CHECK(bernoulli_periodic(2, Rational(7, 3)) == eval_oracle(2, Rational(1, 3)));
}

TEST_CASE("Bernoulli constants: worked values") {
    CHECK(beta_const(1, 0, 2) == CycNum(1, Rational(-1, 24)));
    CHECK(beta_const(1, 1, 2) == CycNum(1, Rational(-1, 24)));
    CHECK(beta_const(2, 1, 2) == CycNum(2, Rational(-1, 32)));
    for (long N = 1; N <= 12; ++N) CHECK(beta_const(N, 0, 1) == CycNum(N, Rational(-1, 4 * N)));
    // (2 pi i)^{-2} zeta(2) = -1/24 and (2 pi i)^{-2} pi^2/8 = -1/32.
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK(std::abs(-pi2 / 6 / (4 * pi2) - (-1.0 / 24)) < 1e-15);
    CHECK(std::abs(-pi2 / 8 / (4 * pi2) - (-1.0 / 32)) < 1e-15);
    CHECK_THROWS_AS(beta_const(3, 1, 0), std::invalid_argument);
}

TEST_CASE("Bernoulli constants against their defining sum in floating point") {
    for (long N = 1; N <= 8; ++N)
        for (long a = 0; a < N; ++a)
            for (int n = 1; n <= 8; ++n) {
                std::complex<double> s = 0;
                double fact = 1;
                for (int i = 2; i <= n; ++i) fact *= i;
                for (long l = 1; l <= N; ++l)
                    s += test::root(N, -l * a) * eval_oracle(n, Rational(l, N)).to_double();
                s *= -1.0 / (2.0 * static_cast<double>(N) * fact);
                CHECK(test::close(beta_const(N, a, n).to_complex(), s, 1e-12));
            }
}

TEST_CASE("generating function coefficients are the Bernoulli constants") {
    const auto level1 = beta_generating_series(1, 0, 6);
    Rational fact(1);
    for (int k = 1; k <= 6; ++k) {
        fact *= Rational(k);
        CHECK(level1[static_cast<std::size_t>(k - 1)] == CycNum(1, -eval_oracle(k, Rational(1)) / (Rational(2) * fact)));
    }
    CHECK(beta_generating_series(2, 1, 3)[1] == CycNum(2, Rational(-1, 32)));
    for (long N = 1; N <= 12; ++N)
        for (long a = 0; a < N; ++a) {
            CHECK(beta_genfun_check(N, a, 12).pass);
            const auto series = beta_generating_series(N, a, 8);
            for (int k = 1; k <= 8; ++k) CHECK(series[static_cast<std::size_t>(k - 1)] == beta_const(N, a, k));
        }
}

TEST_CASE("the constant term is w/(w-1), not 1/(w-1)") {
    // For a != 0 the literal -(1/(2N)) / (w - 1) has constant term -(1/(2N)) / (eta^{-a} - 1),
    // which sits exactly 1/(2N) above beta_1^a.
    for (long N = 2; N <= 12; ++N)
        for (long a = 1; a < N; ++a) {
            const CycNum literal = (CycNum::root_power(N, -a) - CycNum::one(N)).inv() * Rational(-1, 2 * N);
            CHECK(literal - beta_const(N, a, 1) == CycNum(N, Rational(1, 2 * N)));
        }
}

TEST_CASE("parity of periodic Bernoulli sums") {
    CHECK(periodic_bernoulli_sum(4, 1, 1) == CycNum::root_power(4, 1) * Rational(1, 2));
    CHECK(periodic_bernoulli_sum(4, 1, 1).galois(3) == -periodic_bernoulli_sum(4, 1, 1));
    for (long N = 1; N <= 20; ++N)
        for (int n = 1; n <= 12; ++n)
            for (const auto& c : vanish_symmetry_check(N, n)) CHECK(c.pass);
}
