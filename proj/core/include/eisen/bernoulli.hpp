#pragma once

#include <vector>

#include "eisen/cyclotomic.hpp"
#include "eisen/polynomial.hpp"

namespace eisen {

// B_n(x) with B_1(x) = x - 1/2. Cached; degrees up to 64 are built eagerly on
// first use, larger ones on demand.
const CycPoly& bernoulli_poly(int n);
Rational bernoulli_number(int n);

// Periodic Bernoulli function at a rational point: B_n({x}), except that the
// first one vanishes at integers (symmetric principal-value convention).
Rational bernoulli_periodic(int n, const Rational& x);

// -1/(2N n!) sum_{l=1}^{N} eta^{-l a} B_n(l/N), with the polynomial value B_n(1) at l = N.
CycNum beta_const(long N, long a, int n);

// sum_{l=1}^{N} eta^{-l a} Bbar_n(l/N) with the periodic convention.
CycNum periodic_bernoulli_sum(long N, long a, int n);

// Coefficients X^0 .. X^{K-1} of -(1/(2N)) w/(w-1) + delta_{a,0}/(2X),
// w = eta^{-a} e^{X/N}, as a formal series over Q(zeta_N).
std::vector<CycNum> beta_generating_series(long N, long a, int K);

struct BetaGenfunCheck {
    bool pass;
    int first_bad_order;  // 0 when pass
};
BetaGenfunCheck beta_genfun_check(long N, long a, int K);

struct SymmetryCheck {
    long residue;
    bool pass;
};
// galois(N-1) fixes the periodic sum when n is even and negates it when n is odd.
std::vector<SymmetryCheck> vanish_symmetry_check(long N, int n);

}  // namespace eisen
