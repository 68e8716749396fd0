#include "eisen/assignment.hpp"

#include <algorithm>
#include <stdexcept>

#include "eisen/arith.hpp"

namespace eisen {

GammaLambdaAssignment::GammaLambdaAssignment(long N)
    : n_(N),
      gamma_(static_cast<std::size_t>(N * N), SymbolVec(N)),
      lambda_(static_cast<std::size_t>(N * (N + 1) / 2), SymbolVec(N)) {}

std::size_t GammaLambdaAssignment::pair_index(long a, long b) const {
    a = mod(a, n_);
    b = mod(b, n_);
    if (a > b) std::swap(a, b);
    // rows 0..a-1 hold N, N-1, ... entries
    return static_cast<std::size_t>(a * n_ - a * (a - 1) / 2 + (b - a));
}

const SymbolVec& GammaLambdaAssignment::gamma(long a, long b) const {
    return gamma_[static_cast<std::size_t>(mod(a, n_) * n_ + mod(b, n_))];
}
SymbolVec& GammaLambdaAssignment::gamma(long a, long b) {
    return gamma_[static_cast<std::size_t>(mod(a, n_) * n_ + mod(b, n_))];
}
const SymbolVec& GammaLambdaAssignment::lambda(long a, long b) const { return lambda_[pair_index(a, b)]; }
SymbolVec& GammaLambdaAssignment::lambda(long a, long b) { return lambda_[pair_index(a, b)]; }

GammaLambdaAssignment GammaLambdaAssignment::closed_form(long N) {
    if (N == 1) {
        GammaLambdaAssignment g(1);
        g.gamma(0, 0) = SymbolVec::F(1, 0);
        return g;
    }
    if (N == 2) {
        GammaLambdaAssignment g(2);
        g.gamma(0, 0) = SymbolVec::F(2, 0);
        g.gamma(1, 1) = SymbolVec::G(2, 1) - SymbolVec::F(2, 1);
        g.lambda(1, 1) = SymbolVec::F(2, 1, -1);
        return g;
    }
    if (N != 3) throw std::invalid_argument("closed_form: only levels 1, 2 and 3 are available");
    GammaLambdaAssignment g(3);
    g.gamma(0, 0) = SymbolVec::G(3, 0);
    for (long a = 1; a <= 2; ++a) {
        g.gamma(a, a) = SymbolVec::G(3, a) - SymbolVec::F(3, a);
        g.gamma(a, 0) = SymbolVec::F(3, 0) + SymbolVec::F(3, a) - g.gamma(a, a);
        g.gamma(0, a) = -g.gamma(a, 0);
        g.lambda(a, a) = SymbolVec::F(3, a, -1);
    }
    return g;
}

AssignmentSeries AssignmentSeries::evaluate(const GammaLambdaAssignment& asg, SeriesCache& cache) {
    const long N = asg.level();
    AssignmentSeries s;
    s.level = N;
    s.truncation = cache.truncation();
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b) {
            s.gamma.push_back(symbolvec_to_series(asg.gamma(a, b), cache));
            s.lambda.push_back(symbolvec_to_series(asg.lambda(a, b), cache));
        }
    return s;
}

const QSeries& AssignmentSeries::gamma_at(long a, long b) const {
    return gamma[static_cast<std::size_t>(mod(a, level) * level + mod(b, level))];
}
QSeries& AssignmentSeries::gamma_at(long a, long b) {
    return gamma[static_cast<std::size_t>(mod(a, level) * level + mod(b, level))];
}
const QSeries& AssignmentSeries::lambda_at(long a, long b) const {
    return lambda[static_cast<std::size_t>(mod(a, level) * level + mod(b, level))];
}

void AssignmentSeries::add_to_lambda(long a, long b, const QSeries& delta) {
    a = mod(a, level);
    b = mod(b, level);
    lambda[static_cast<std::size_t>(a * level + b)] += delta;
    if (a != b) lambda[static_cast<std::size_t>(b * level + a)] += delta;
}

}  // namespace eisen
