#include "eisen/double_shuffle.hpp"

#include <algorithm>
#include <mutex>

#include "eisen/arith.hpp"
#include "eisen/bernoulli.hpp"
#include "eisen/parallel.hpp"

namespace eisen {

namespace {

Rational sign(long e) { return Rational(e % 2 == 0 ? 1 : -1); }

}  // namespace

ShuffleContext::ShuffleContext(AssignmentSeries assignment, SeriesCache& cache)
    : asg_(std::move(assignment)), cache_(cache) {
    if (cache_.level() != asg_.level || cache_.truncation() != asg_.truncation)
        throw std::invalid_argument("ShuffleContext: cache does not match the assignment");
}

const CycNum& ShuffleContext::beta(long a, int n) {
    const auto key = std::make_pair(mod(a, level()), n);
    {
        std::shared_lock lock(mu_);
        if (auto it = beta_.find(key); it != beta_.end()) return it->second;
    }
    CycNum v = beta_const(level(), key.first, n);
    std::unique_lock lock(mu_);
    return beta_.try_emplace(key, std::move(v)).first->second;
}

QSeries ShuffleContext::beta_rs(long a, long b, int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("beta_rs: r and s must be positive");
    QSeries out = cache_.g(a, r) * beta(b, s);
    for (int i = 1; i < r + s; ++i) {
        const int j = r + s - i;
        const Rational ca = sign(s) * Rational(binomial(i - 1, s - 1));
        const Rational cb = sign(i - r) * Rational(binomial(i - 1, r - 1));
        if (ca.is_zero() && cb.is_zero()) continue;
        QSeries inner = cache_.zero();
        inner.add_scaled(cache_.g(a, j), ca);
        inner.add_scaled(cache_.g(b, j), cb);
        out.add_scaled(inner, beta(a - b, i));
    }
    return out;
}

QSeries ShuffleContext::eps_rs(long a, long b, int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("eps_rs: r and s must be positive");
    QSeries out = cache_.zero();
    if (r == 2) out += cache_.g_prime(b, s);
    if (r == 1) out -= cache_.g_prime(b, s - 1);
    if (s == 1) {
        out += cache_.g_prime(a, r - 1);
        out += cache_.g(a, r);
    }
    if (r == 1 && s == 1) out.add_scaled(asg_.gamma_at(a, b), Rational(level()));
    return out;
}

const QSeries& ShuffleContext::E(long a, long b, int r, int s) {
    const auto key = std::make_tuple(mod(a, level()), mod(b, level()), r, s);
    {
        std::shared_lock lock(mu_);
        if (auto it = e_.find(key); it != e_.end()) return it->second;
    }
    QSeries v = cache_.g2(a, b, r, s) + beta_rs(a, b, r, s);
    v.add_scaled(eps_rs(a, b, r, s), Rational(1, 2 * level()));
    std::unique_lock lock(mu_);
    return e_.try_emplace(key, std::move(v)).first->second;
}

const QSeries& ShuffleContext::E_single(long a, int k) { return k > 2 ? cache_.g(a, k) : cache_.zero(); }

QSeries ShuffleContext::P(long a, long b, int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("P: r and s must be positive");
    const QSeries& ga = cache_.g(a, r);
    const QSeries& gb = cache_.g(b, s);
    QSeries out = ga * gb;
    out.add_scaled(gb, beta(a, r));
    out.add_scaled(ga, beta(b, s));
    const Rational half_inv(1, 2 * level());
    if (r == 2) out.add_scaled(cache_.g_prime(b, s), half_inv);
    if (s == 2) out.add_scaled(cache_.g_prime(a, r), half_inv);
    if (r == 1 && s == 1) out += asg_.lambda_at(a, b);
    return out;
}

namespace {

struct OneShot {
    SeriesCache cache;
    ShuffleContext ctx;
    OneShot(long N, const GammaLambdaAssignment& asg, int M)
        : cache(N, M), ctx(AssignmentSeries::evaluate(asg, cache), cache) {
        if (asg.level() != N) throw std::invalid_argument("assignment level does not match N");
    }
};

}  // namespace

QSeries beta_rs_series(long N, long a, long b, int r, int s, int M) {
    return OneShot(N, GammaLambdaAssignment(N), M).ctx.beta_rs(a, b, r, s);
}
QSeries eps_rs_series(long N, long a, long b, int r, int s, const GammaLambdaAssignment& asg, int M) {
    return OneShot(N, asg, M).ctx.eps_rs(a, b, r, s);
}
QSeries E_series(long N, long a, long b, int r, int s, const GammaLambdaAssignment& asg, int M) {
    return OneShot(N, asg, M).ctx.E(a, b, r, s);
}
QSeries E_single(long N, long a, int k, int M) {
    return OneShot(N, GammaLambdaAssignment(N), M).ctx.E_single(a, k);
}
QSeries P_series(long N, long a, long b, int r, int s, const GammaLambdaAssignment& asg, int M) {
    return OneShot(N, asg, M).ctx.P(a, b, r, s);
}

const char* to_string(ShuffleRelation r) { return r == ShuffleRelation::Stuffle ? "stuffle" : "shuffle"; }

DoubleShuffleReport verify_double_shuffle(const AssignmentSeries& asg, SeriesCache& cache, int max_weight,
                                          const DoubleShuffleOptions& options) {
    const long N = asg.level;
    DoubleShuffleReport rep;
    rep.level = N;
    rep.max_weight = max_weight;
    rep.truncation = asg.truncation;
    rep.precheck = check_assignment(asg, cache);
    rep.precheck_pass = std::all_of(rep.precheck.begin(), rep.precheck.end(), [](const auto& c) { return c.pass; });
    if (!rep.precheck_pass && !options.unchecked) {
        std::string bad;
        for (const auto& c : rep.precheck)
            if (!c.pass) bad += (bad.empty() ? "" : ", ") + c.label;
        throw AssignmentRejected("assignment does not satisfy the linear system: " + bad);
    }

    struct Cell {
        long a, b;
        int r, s;
    };
    std::vector<Cell> cells;
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b)
            for (int w = 2; w <= max_weight; ++w)
                for (int r = 1; r < w; ++r) cells.push_back({a, b, r, w - r});

    ShuffleContext ctx(asg, cache);
    std::vector<DoubleShuffleRow> stuffle(cells.size()), shuffle(cells.size());
    parallel_for(cells.size(), options.jobs, [&](std::size_t idx) {
        const auto [a, b, r, s] = cells[idx];
        const QSeries p = ctx.P(a, b, r, s);

        QSeries st = ctx.E(a, b, r, s) + ctx.E(b, a, s, r);
        if (a == b) st += ctx.E_single(a, r + s);
        auto row = [&](ShuffleRelation rel, const QSeries& other) {
            auto bad = p.first_difference(other);
            DoubleShuffleRow out{N, a, b, r, s, rel, !bad, bad, {}, {}};
            if (bad) {
                out.lhs_at_bad = p[*bad].str();
                out.rhs_at_bad = other[*bad].str();
            }
            return out;
        };
        stuffle[idx] = row(ShuffleRelation::Stuffle, st);

        QSeries sh = cache.zero();
        for (int i = 1; i < r + s; ++i) {
            const int j = r + s - i;
            if (auto c = binomial(i - 1, r - 1); c != 0) sh.add_scaled(ctx.E(a + b, b, i, j), Rational(c));
            if (auto c = binomial(i - 1, s - 1); c != 0) sh.add_scaled(ctx.E(a + b, a, i, j), Rational(c));
        }
        shuffle[idx] = row(ShuffleRelation::Shuffle, sh);
    });

    rep.rows = std::move(stuffle);
    rep.rows.insert(rep.rows.end(), shuffle.begin(), shuffle.end());
    rep.pass = rep.precheck_pass && std::all_of(rep.rows.begin(), rep.rows.end(), [](const auto& r) { return r.pass; });
    return rep;
}

DoubleShuffleReport verify_double_shuffle(const GammaLambdaAssignment& asg, int max_weight, int M,
                                          const DoubleShuffleOptions& options) {
    SeriesCache cache(asg.level(), M);
    return verify_double_shuffle(AssignmentSeries::evaluate(asg, cache), cache, max_weight, options);
}

}  // namespace eisen
