#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eisen/assignment.hpp"
#include "eisen/sparse_elim.hpp"
#include "eisen/symbols.hpp"

namespace eisen {

// ---------------------------------------------------------------------------
// Labels

enum class RowKind { LS1, LS2, LS3 };
struct RowLabel {
    RowKind kind;
    long a;
    long b;  // unused for LS3
    std::string str() const;
    friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

enum class ColKind { Lambda, Gamma };
struct ColLabel {
    ColKind kind;
    long a;
    long b;
    std::string str() const;
    friend bool operator==(const ColLabel&, const ColLabel&) = default;
    friend auto operator<=>(const ColLabel&, const ColLabel&) = default;
};

// ---------------------------------------------------------------------------
// The linear system for gamma/lambda:
//   LS1(a,b), a <= b:  gamma^{a+b,b} + gamma^{a+b,a} - 2 lambda^{a,b} = F_a + F_b
//   LS2(a,b), a <  b:  gamma^{a,b} + gamma^{b,a} - gamma^{a+b,a} - gamma^{a+b,b} = -F_a - F_b
//   LS3(a),   a >= 1:  gamma^{a,a} - gamma^{2a,a} = G_a - F_a
// Columns: lambda^{a<=b}, gamma^{a<b}, gamma^{a,a}, gamma^{a>b}, each lexicographic.

struct LinSystem {
    long level = 1;
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;  // dense row-major; every entry lies in {-2,...,2}
    std::vector<SymbolVec> rhs;
    std::vector<RowLabel> row_labels;
    std::vector<ColLabel> col_labels;

    int at(int r, int c) const { return entries[static_cast<std::size_t>(r * cols + c)]; }
    SparseVec sparse_row(int r) const;
    int col_index(const ColLabel& label) const;
    int row_index(const RowLabel& label) const;
};

LinSystem build_system(long N);

// Left null vector attached to a proper divisor d of N: ones on
//   LS2(0,b) with gcd(b,N) = d, LS2(a,b) with 1 <= a < b and gcd(a,b,N) = d,
//   LS3(a) with gcd(a,N) = d.
std::vector<Rational> null_vector(long N, long d);

// n . b as a symbol vector.
SymbolVec pair_with_rhs(const LinSystem& sys, const std::vector<Rational>& n);

// Places the level-N/d symbols of v at residues d*a (F_{a'} -> F_{d a'}, G_{a'} -> G_{d a'}).
SymbolVec embed_symbols(const SymbolVec& v, long N, long d);

struct RankResult {
    int rank = 0;
    int nullity = 0;  // rows - rank
    std::vector<ColLabel> pivots;
    std::vector<ColLabel> free;
    bool matches_expected_free = false;
};
RankResult rank_and_pivots(long N);

// lambda^{a,b} for all a <= b, gamma^{a,b} for a < b, and gamma^{a,a} for 1 <= a < N with (N-a) not dividing N.
std::vector<ColLabel> expected_pivot_columns(long N);
std::vector<ColLabel> expected_free_columns(long N);

struct NullSpaceDivisor {
    long d;
    bool annihilates;
    bool series_vanishes;
    std::optional<int> first_bad_power;
    SymbolVec pairing;            // n . b
    bool decomposes;              // n . b = c * embed(divisor_identity_symbols(N/d))
    Rational scale;               // c
};

struct NullSpaceReport {
    long level;
    int kernel_dim;
    int expected_kernel_dim;  // nu(N) - 1
    bool vectors_independent;
    std::vector<NullSpaceDivisor> divisors;
    bool pass;
};
NullSpaceReport verify_null_space(long N, int M);

struct ResidualRow {
    RowLabel label;
    SymbolVec value;
    bool series_vanishes;
    bool symbolic_vanishes;  // lies in the span of the embedded identity vectors
};

struct SolveResult {
    GammaLambdaAssignment assignment;
    std::vector<ColLabel> pivot_cols;
    std::vector<ColLabel> free_cols;
    std::vector<ResidualRow> residual_rows;
    bool consistent;
};

// free_values: keyed by free column; missing free columns default to zero.
SolveResult solve(long N, const std::map<ColLabel, SymbolVec>& free_values, int M);

// Whether v is a rational combination of embed(divisor_identity_symbols(N/d)) over proper divisors d with N/d >= 2.
bool in_identity_span(const SymbolVec& v);

struct EquationCheck {
    std::string label;  // stuffle(a,b) or shuffle(a,b)
    long a;
    long b;
    bool pass;
    std::optional<int> first_bad_power;
    std::string lhs_at_bad;  // coefficients at first_bad_power, empty on pass
    std::string rhs_at_bad;
};

// Evaluates
//   stuffle(a,a): gamma^{a,a} - lambda^{a,a} = g~_2^a
//   stuffle(a,b), a < b: gamma^{a,b} + gamma^{b,a} - 2 lambda^{a,b} = 0
//   shuffle(a,b), a <= b: gamma^{a+b,a} + gamma^{a+b,b} - 2 lambda^{a,b} = f_2^a + f_2^b
// through q^M.
std::vector<EquationCheck> check_assignment(const AssignmentSeries& asg, SeriesCache& cache);
std::vector<EquationCheck> check_assignment(const GammaLambdaAssignment& asg, int M);

}  // namespace eisen
