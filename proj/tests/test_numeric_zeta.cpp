#include <numbers>

#include "doctest.h"
#include "eisen/bernoulli.hpp"
#include "eisen/numeric_zeta.hpp"

using namespace eisen;
using std::numbers::pi;

namespace {

constexpr double kZeta3 = 1.2020569031595942854;

bool within(const NumericValue& v, double exact, double slack = 0) {
    return std::abs(v.value - std::complex<double>(exact)) <= v.error_bound + slack;
}

}  // namespace

TEST_CASE("depth-one values") {
    const auto z2 = zeta_numeric(1, 0, 2, 1e-10);
    CHECK(std::abs(z2.value.real() - pi * pi / 6) < 1e-9);
    CHECK(within(z2, pi * pi / 6));
    CHECK(std::abs(zeta_numeric(2, 1, 2, 1e-10).value.real() - pi * pi / 8) < 1e-9);
    CHECK(std::abs(zeta_numeric(4, 0, 2, 1e-10).value.real() - pi * pi / 96) < 1e-9);
    const double z4 = std::pow(pi, 4) / 90;
    CHECK(within(zeta_numeric(2, 0, 4, 1e-12), z4 / 16));
    CHECK(within(zeta_numeric(2, 1, 4, 1e-12), z4 * 15 / 16));
    // Residues partition the integers.
    for (long N : {3, 5, 7}) {
        double total = 0, bound = 0;
        for (long a = 0; a < N; ++a) {
            const auto v = zeta_numeric(N, a, 3, 1e-11);
            total += v.value.real();
            bound += v.error_bound;
        }
        CHECK(std::abs(total - kZeta3) <= bound + 1e-14);
    }
}

TEST_CASE("error bounds hold and shrink with the cutoff") {
    double prev = INFINITY;
    for (long T : {10, 20, 40, 80, 160, 320}) {
        const auto v = zeta_numeric_cutoff(1, 0, 2, T);
        CHECK(v.error_bound <= prev);
        CHECK(within(v, pi * pi / 6));
        prev = v.error_bound;
    }
    prev = INFINITY;
    for (long X : {50, 100, 200, 400, 800, 1600}) {
        const auto v = double_zeta_numeric_cutoff(1, 0, 0, 2, 1, X);
        CHECK(v.error_bound <= prev);
        CHECK(within(v, kZeta3));
        prev = v.error_bound;
    }
    prev = INFINITY;
    for (long T : {10, 40, 160, 640}) {
        const auto v = frakz_numeric_cutoff(4, 1, 1, T);
        CHECK(v.error_bound <= prev);
        CHECK(within(v, pi / 8));
        prev = v.error_bound;
    }
}

TEST_CASE("depth-two values") {
    const auto z22 = double_zeta_numeric(1, 0, 0, 2, 2, 1e-9);
    CHECK(std::abs(z22.value.real() - std::pow(pi, 4) / 120) < 1e-6);
    CHECK(within(z22, std::pow(pi, 4) / 120));
    CHECK(within(double_zeta_numeric(1, 0, 0, 2, 1, 1e-9), kZeta3));
    CHECK_THROWS_AS(double_zeta_numeric(1, 0, 0, 1, 2), std::invalid_argument);
}

TEST_CASE("numerical double shuffle") {
    CHECK(verify_dbsf_numeric(1, 0, 0, 2, 2).pass());
    CHECK(verify_dbsf_numeric(3, 1, 2, 3, 2).pass());
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            for (int w = 4; w <= 8; ++w)
                for (int r = 2; r <= w - 2; ++r) CHECK(verify_dbsf_numeric(2, a, b, r, w - r, 1e-6).pass());
    // The stuffle form for (1,1;2,2) at level 2, summed by hand.
    const double prod = std::pow(zeta_numeric(2, 1, 2, 1e-12).value.real(), 2);
    const double rhs = 2 * double_zeta_numeric(2, 1, 1, 2, 2, 1e-10).value.real() + zeta_numeric(2, 1, 4, 1e-12).value.real();
    CHECK(std::abs(prod - rhs) < 1e-6);
}

TEST_CASE("symmetric sums against Bernoulli values") {
    const auto c = frakz_vs_bernoulli(4, 1, 1);
    CHECK(c.pass);
    CHECK(std::abs(c.numeric.value - std::complex<double>(pi / 8)) < 1e-8);
    CHECK(std::abs(c.bernoulli - std::complex<double>(pi / 8)) < 1e-12);
    CHECK(std::abs(frakz_numeric(1, 0, 2).value - std::complex<double>(pi * pi / 6)) < 1e-9);
    CHECK(std::abs(frakz_numeric(1, 0, 1).value) < 1e-12);
    for (long N = 1; N <= 6; ++N)
        for (long a = 0; a < N; ++a)
            for (int n = 1; n <= 8; ++n) {
                CHECK(frakz_vs_bernoulli(N, a, n, 1e-8).pass);
                if (n >= 2) CHECK(reflection_check(N, a, n, 1e-8).pass);
            }
}

TEST_CASE("sign of the depth-one constant") {
    const auto r = gbtz_sign_probe(1L, 0L, 1e-8, 8);
    CHECK(r.sign == '-');
    CHECK(std::abs(r.beta1 - std::complex<double>(-0.25)) < 1e-15);
    CHECK(std::abs(r.scaled_frakz1) < 1e-12);
    for (long N = 1; N <= 8; ++N) {
        const auto p = gbtz_sign_probe(N);
        CHECK_FALSE(p.anomaly);
        CHECK(p.consensus == '-');
        for (const auto& row : p.rows) CHECK(row.higher_pass);
    }
}

TEST_CASE("polylogarithms at roots of unity") {
    CHECK(std::abs(polylog_root_of_unity(1, 0, 2).value - std::complex<double>(pi * pi / 6)) < 1e-6);
    // Li_2(-1) = -pi^2/12.
    CHECK(std::abs(polylog_root_of_unity(2, 1, 2).value - std::complex<double>(-pi * pi / 12)) < 1e-6);
    for (long N = 1; N <= 4; ++N)
        for (long a = 0; a < N; ++a) CHECK(polylog_consistency(N, a, 2).pass);
}
