#pragma once

#include <complex>
#include <vector>

namespace eisen {

// Double precision value with an error estimate built from Euler-Maclaurin
// remainders plus a compensated-summation rounding term.
struct NumericValue {
    std::complex<double> value;
    double error_bound;
};

// Cutoffs never exceed this many terms; if the tail bound is still above the
// tolerance the reported error_bound says so.
inline constexpr long kMaxTerms = 20'000'000;

// sum_{n > 0, n = a mod N} n^{-s}, s >= 2.
NumericValue zeta_numeric(long N, long a, int s, double tol = 1e-10);
// Same with T terms summed directly before the tail correction.
NumericValue zeta_numeric_cutoff(long N, long a, int s, long T);

// sum_{n1 > n2 > 0, n1 = a, n2 = b mod N} n1^{-r} n2^{-s}, r >= 2, s >= 1.
NumericValue double_zeta_numeric(long N, long a, long b, int r, int s, double tol = 1e-9);
// Direct summation over n1 <= X, analytic tail beyond.
NumericValue double_zeta_numeric_cutoff(long N, long a, long b, int r, int s, long X);

// Both depth-two decompositions of zeta^a(r) zeta^b(s):
//   stuffle: zeta^{a,b}(r,s) + zeta^{b,a}(s,r) + d_{ab} zeta^a(r+s)
//   shuffle: sum_{i+j=r+s} [C(i-1,r-1) zeta^{a+b,b}(i,j) + C(i-1,s-1) zeta^{a+b,a}(i,j)]
struct DbsfCheck {
    long N;
    long a;
    long b;
    int r;
    int s;
    double product;
    double stuffle_residual;
    double stuffle_bound;
    double shuffle_residual;
    double shuffle_bound;
    bool stuffle_pass;
    bool shuffle_pass;
    bool pass() const { return stuffle_pass && shuffle_pass; }
};
// Passes when |residual| <= combined error bound + tol. Requires r, s >= 2.
DbsfCheck verify_dbsf_numeric(long N, long a, long b, int r, int s, double tol = 1e-8);

// (1/2) sum over nonzero integers k = a mod N of k^{-n}; for n = 1 the sum is
// taken symmetrically (principal value), pairing k with the negative term of
// the same size rank.
NumericValue frakz_numeric(long N, long a, int n, double tol = 1e-10);
NumericValue frakz_numeric_cutoff(long N, long a, int n, long T);

// -(2 pi i)^n / (2N n!) sum_{l=1}^N eta^{-la} Bbar_n(l/N), evaluated from the exact sum.
std::complex<double> frakz_bernoulli(long N, long a, int n);

struct FrakzCheck {
    long N;
    long a;
    int n;
    NumericValue numeric;
    std::complex<double> bernoulli;
    double difference;
    bool pass;
};
FrakzCheck frakz_vs_bernoulli(long N, long a, int n, double tol = 1e-8);

// frakz^a(n) against (zeta^a(n) + (-1)^n zeta^{-a}(n)) / 2, n >= 2.
struct ReflectionCheck {
    long N;
    long a;
    int n;
    double difference;
    bool pass;
};
ReflectionCheck reflection_check(long N, long a, int n, double tol = 1e-8);

// For each residue a: which constant c in {+1/(4N), -1/(4N)} makes
// beta_1^a = (2 pi i)^{-1} frakz^a(1) + c, and whether beta_n^a = (2 pi i)^{-n} frakz^a(n)
// for 2 <= n <= max_n.
struct SignProbeRow {
    long a;
    std::complex<double> beta1;
    std::complex<double> scaled_frakz1;
    char sign;  // '+', '-', or '?' when neither fits
    bool higher_pass;
    int first_bad_n;  // 0 when higher_pass
};
struct SignProbe {
    long N;
    std::vector<SignProbeRow> rows;
    bool anomaly;  // some residue fits neither sign
    char consensus;  // '+' or '-' when all rows agree, '?' otherwise
};
SignProbeRow gbtz_sign_probe(long N, long a, double tol = 1e-8, int max_n = 8);
SignProbe gbtz_sign_probe(long N, double tol = 1e-8, int max_n = 8);

// Li_s(eta^beta) = sum_{n >= 1} eta^{beta n} n^{-s} by direct summation, s >= 2;
// the tail bound is K^{1-s}/(s-1) for K terms.
NumericValue polylog_root_of_unity(long N, long beta, int s, double tol = 1e-7);

// zeta^a(s) against (1/N) sum_beta eta^{-beta a} Li_s(eta^beta).
struct PolylogCheck {
    long N;
    long a;
    int s;
    double difference;
    double bound;
    bool pass;
};
PolylogCheck polylog_consistency(long N, long a, int s, double tol = 1e-6);

}  // namespace eisen
