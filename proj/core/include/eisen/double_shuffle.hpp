#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "eisen/assignment.hpp"
#include "eisen/eisenstein.hpp"
#include "eisen/gamma_solver.hpp"

namespace eisen {

// Shared state for assembling the double shuffle objects at one level and
// truncation: the q-series cache, beta constants and memoized E values.
// Thread-safe once constructed.
class ShuffleContext {
public:
    ShuffleContext(AssignmentSeries assignment, SeriesCache& cache);

    long level() const { return asg_.level; }
    int truncation() const { return asg_.truncation; }
    SeriesCache& cache() { return cache_; }
    const AssignmentSeries& assignment() const { return asg_; }

    const CycNum& beta(long a, int n);

    // g~_r^a beta_s^b + sum_{i+j=r+s} beta_i^{a-b} [(-1)^s C(i-1,s-1) g~_j^a + (-1)^{i-r} C(i-1,r-1) g~_j^b]
    QSeries beta_rs(long a, long b, int r, int s);
    // d_{r2} (g~_s^b)' - d_{r1} (g~_{s-1}^b)' + d_{s1} ((g~_{r-1}^a)' + g~_r^a) + N d_{r1} d_{s1} gamma^{a,b}
    QSeries eps_rs(long a, long b, int r, int s);
    // g~_{r,s}^{a,b} + beta_{r,s} + eps_{r,s} / (2N); memoized.
    const QSeries& E(long a, long b, int r, int s);
    // g~_k^a for k > 2, zero otherwise.
    const QSeries& E_single(long a, int k);
    // g~_r^a g~_s^b + beta_r^a g~_s^b + beta_s^b g~_r^a
    //   + (d_{r2} (g~_s^b)' + d_{s2} (g~_r^a)') / (2N) + d_{r1} d_{s1} lambda^{a,b}
    QSeries P(long a, long b, int r, int s);

private:
    AssignmentSeries asg_;
    SeriesCache& cache_;
    std::shared_mutex mu_;
    std::map<std::pair<long, int>, CycNum> beta_;
    std::map<std::tuple<long, long, int, int>, QSeries> e_;
};

// One-shot helpers building a fresh context.
QSeries beta_rs_series(long N, long a, long b, int r, int s, int M);
QSeries eps_rs_series(long N, long a, long b, int r, int s, const GammaLambdaAssignment& asg, int M);
QSeries E_series(long N, long a, long b, int r, int s, const GammaLambdaAssignment& asg, int M);
QSeries E_single(long N, long a, int k, int M);
QSeries P_series(long N, long a, long b, int r, int s, const GammaLambdaAssignment& asg, int M);

enum class ShuffleRelation { Stuffle, Shuffle };
const char* to_string(ShuffleRelation r);

struct DoubleShuffleRow {
    long N;
    long a;
    long b;
    int r;
    int s;
    ShuffleRelation relation;
    bool pass;
    std::optional<int> first_bad_power;
    std::string lhs_at_bad;  // P and the expansion at first_bad_power, empty on pass
    std::string rhs_at_bad;
};

struct DoubleShuffleReport {
    long level = 1;
    int max_weight = 2;
    int truncation = 0;
    std::vector<EquationCheck> precheck;
    bool precheck_pass = false;
    std::vector<DoubleShuffleRow> rows;  // stuffle rows first, then shuffle rows
    bool pass = false;
};

struct DoubleShuffleOptions {
    unsigned jobs = 1;      // 0: one per hardware thread
    bool unchecked = false; // run even when the assignment fails the linear system
};

class AssignmentRejected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checks P against the stuffle and shuffle expansions for all a, b and
// r + s <= max_weight, coefficient-exactly through q^M. Throws
// AssignmentRejected when the assignment fails check_assignment, unless
// options.unchecked is set.
DoubleShuffleReport verify_double_shuffle(const AssignmentSeries& asg, SeriesCache& cache, int max_weight,
                                          const DoubleShuffleOptions& options = {});
DoubleShuffleReport verify_double_shuffle(const GammaLambdaAssignment& asg, int max_weight, int M,
                                          const DoubleShuffleOptions& options = {});

}  // namespace eisen
