#pragma once

#include <string>
#include <vector>

#include "eisen/eisenstein.hpp"
#include "eisen/symbols.hpp"

namespace eisen {

// The weight-two constants gamma^{a,b} (all ordered pairs) and lambda^{a,b}
// (unordered pairs) that close the double shuffle relations, as symbol vectors.
class GammaLambdaAssignment {
public:
    GammaLambdaAssignment() : GammaLambdaAssignment(1) {}
    explicit GammaLambdaAssignment(long N);

    long level() const { return n_; }
    const SymbolVec& gamma(long a, long b) const;
    SymbolVec& gamma(long a, long b);
    // Symmetric: lambda(a,b) and lambda(b,a) are the same storage.
    const SymbolVec& lambda(long a, long b) const;
    SymbolVec& lambda(long a, long b);

    friend bool operator==(const GammaLambdaAssignment&, const GammaLambdaAssignment&) = default;

    // Hand-derived closed-form choices at levels 1, 2 and 3:
    //   N=1: gamma^{0,0} = F0.
    //   N=2: gamma^{0,0} = F0, gamma^{1,1} = G1 - F1, lambda^{1,1} = -F1.
    //   N=3: gamma^{a,a} = G_a - F_a, gamma^{a,0} = -gamma^{0,a} = F0 + F_a - gamma^{a,a},
    //        lambda^{a,a} = -F_a for a = 1, 2, and gamma^{0,0} = F0.
    // Everything else is zero. Throws for other levels.
    static GammaLambdaAssignment closed_form(long N);

private:
    std::size_t pair_index(long a, long b) const;
    long n_;
    std::vector<SymbolVec> gamma_;
    std::vector<SymbolVec> lambda_;
};

// An assignment evaluated to q-series. Kept separate from the symbolic form so
// that tests can perturb individual series by terms no symbol vector expresses.
struct AssignmentSeries {
    long level = 1;
    int truncation = 0;
    std::vector<QSeries> gamma;   // index a*N + b
    std::vector<QSeries> lambda;  // index a*N + b, symmetric

    static AssignmentSeries evaluate(const GammaLambdaAssignment& asg, SeriesCache& cache);

    const QSeries& gamma_at(long a, long b) const;
    const QSeries& lambda_at(long a, long b) const;
    QSeries& gamma_at(long a, long b);
    // Updates both orientations.
    void add_to_lambda(long a, long b, const QSeries& delta);
};

}  // namespace eisen
