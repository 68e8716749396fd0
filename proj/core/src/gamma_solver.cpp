#include "eisen/gamma_solver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "eisen/arith.hpp"
#include "eisen/divisor.hpp"

namespace eisen {

std::string RowLabel::str() const {
    switch (kind) {
        case RowKind::LS1: return "LS1(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case RowKind::LS2: return "LS2(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case RowKind::LS3: return "LS3(" + std::to_string(a) + ")";
    }
    return {};
}

std::string ColLabel::str() const {
    return std::string(kind == ColKind::Lambda ? "lambda" : "gamma") + "^{" + std::to_string(a) + "," +
           std::to_string(b) + "}";
}

SparseVec LinSystem::sparse_row(int r) const {
    SparseVec v;
    for (int c = 0; c < cols; ++c)
        if (int x = at(r, c); x != 0) v.emplace_back(c, Rational(x));
    return v;
}

int LinSystem::col_index(const ColLabel& label) const {
    auto it = std::find(col_labels.begin(), col_labels.end(), label);
    if (it == col_labels.end()) throw std::out_of_range("LinSystem: unknown column " + label.str());
    return static_cast<int>(it - col_labels.begin());
}

int LinSystem::row_index(const RowLabel& label) const {
    auto it = std::find(row_labels.begin(), row_labels.end(), label);
    if (it == row_labels.end()) throw std::out_of_range("LinSystem: unknown row " + label.str());
    return static_cast<int>(it - row_labels.begin());
}

namespace {

std::vector<ColLabel> column_order(long N) {
    std::vector<ColLabel> cols;
    for (long a = 0; a < N; ++a)
        for (long b = a; b < N; ++b) cols.push_back({ColKind::Lambda, a, b});
    for (long a = 0; a < N; ++a)
        for (long b = a + 1; b < N; ++b) cols.push_back({ColKind::Gamma, a, b});
    for (long a = 0; a < N; ++a) cols.push_back({ColKind::Gamma, a, a});
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < a; ++b) cols.push_back({ColKind::Gamma, a, b});
    return cols;
}

}  // namespace

LinSystem build_system(long N) {
    if (N < 1) throw std::invalid_argument("build_system: level must be positive");
    LinSystem sys;
    sys.level = N;
    sys.col_labels = column_order(N);
    sys.cols = static_cast<int>(sys.col_labels.size());

    std::map<ColLabel, int> index;
    for (int i = 0; i < sys.cols; ++i) index[sys.col_labels[static_cast<std::size_t>(i)]] = i;
    auto gamma = [&](long a, long b) { return index.at({ColKind::Gamma, mod(a, N), mod(b, N)}); };
    auto lambda = [&](long a, long b) {
        long x = mod(a, N), y = mod(b, N);
        return index.at({ColKind::Lambda, std::min(x, y), std::max(x, y)});
    };

    std::vector<int> row(static_cast<std::size_t>(sys.cols));
    auto emit = [&](RowLabel label, SymbolVec rhs) {
        for (int x : row)
            if (x < -2 || x > 2) throw std::logic_error("build_system: entry out of range");
        sys.entries.insert(sys.entries.end(), row.begin(), row.end());
        sys.rhs.push_back(std::move(rhs));
        sys.row_labels.push_back(label);
        std::fill(row.begin(), row.end(), 0);
    };
    auto at = [&](int c) -> int& { return row[static_cast<std::size_t>(c)]; };

    for (long a = 0; a < N; ++a)
        for (long b = a; b < N; ++b) {
            at(gamma(a + b, b)) += 1;
            at(gamma(a + b, a)) += 1;
            at(lambda(a, b)) -= 2;
            emit({RowKind::LS1, a, b}, SymbolVec::F(N, a) + SymbolVec::F(N, b));
        }
    for (long a = 0; a < N; ++a)
        for (long b = a + 1; b < N; ++b) {
            at(gamma(a, b)) += 1;
            at(gamma(b, a)) += 1;
            at(gamma(a + b, a)) -= 1;
            at(gamma(a + b, b)) -= 1;
            emit({RowKind::LS2, a, b}, -(SymbolVec::F(N, a) + SymbolVec::F(N, b)));
        }
    for (long a = 1; a < N; ++a) {
        at(gamma(a, a)) += 1;
        at(gamma(2 * a, a)) -= 1;
        emit({RowKind::LS3, a, 0}, SymbolVec::G(N, a) - SymbolVec::F(N, a));
    }
    sys.rows = static_cast<int>(sys.row_labels.size());
    return sys;
}

std::vector<Rational> null_vector(long N, long d) {
    if (d < 1 || N % d != 0 || d == N)
        throw std::invalid_argument("null_vector: d must be a proper divisor of N");
    LinSystem sys = build_system(N);
    std::vector<Rational> n(static_cast<std::size_t>(sys.rows));
    for (int r = 0; r < sys.rows; ++r) {
        const RowLabel& l = sys.row_labels[static_cast<std::size_t>(r)];
        bool one = false;
        if (l.kind == RowKind::LS2)
            one = l.a == 0 ? gcd_level(l.b, N) == d : gcd_level(l.a, l.b, N) == d;
        else if (l.kind == RowKind::LS3)
            one = gcd_level(l.a, N) == d;
        if (one) n[static_cast<std::size_t>(r)] = 1;
    }
    return n;
}

SymbolVec pair_with_rhs(const LinSystem& sys, const std::vector<Rational>& n) {
    SymbolVec out(sys.level);
    for (int r = 0; r < sys.rows; ++r) out.add_scaled(sys.rhs[static_cast<std::size_t>(r)], n[static_cast<std::size_t>(r)]);
    return out;
}

SymbolVec embed_symbols(const SymbolVec& v, long N, long d) {
    if (v.level() * d != N) throw std::invalid_argument("embed_symbols: level mismatch");
    SymbolVec out(N);
    for (long a = 0; a < v.level(); ++a) {
        out.f(mod(d * a, N)) += v.f(a);
        if (a > 0) out.g(mod(d * a, N)) += v.g(a);
    }
    return out;
}

std::vector<ColLabel> expected_free_columns(long N) {
    std::set<ColLabel> s;
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < a; ++b) s.insert({ColKind::Gamma, a, b});
    for (long a = 1; a <= N; ++a)
        if (N % a == 0) s.insert({ColKind::Gamma, mod(N - a, N), mod(N - a, N)});
    std::vector<ColLabel> out;
    for (const auto& c : column_order(N))
        if (s.count(c)) out.push_back(c);
    return out;
}

std::vector<ColLabel> expected_pivot_columns(long N) {
    std::vector<ColLabel> out;
    for (const auto& c : column_order(N)) {
        if (c.kind == ColKind::Lambda || c.a < c.b)
            out.push_back(c);
        else if (c.a == c.b && c.a >= 1 && N % (N - c.a) != 0)
            out.push_back(c);
    }
    return out;
}

RankResult rank_and_pivots(long N) {
    LinSystem sys = build_system(N);
    EchelonBasis<> eb(sys.cols);
    for (int r = 0; r < sys.rows; ++r) eb.insert(sys.sparse_row(r));
    RankResult res;
    res.rank = eb.rank();
    res.nullity = sys.rows - res.rank;
    std::set<int> piv;
    for (int c : eb.pivot_columns()) piv.insert(c);
    for (int c = 0; c < sys.cols; ++c)
        (piv.count(c) ? res.pivots : res.free).push_back(sys.col_labels[static_cast<std::size_t>(c)]);
    res.matches_expected_free = res.free == expected_free_columns(N) && res.pivots == expected_pivot_columns(N);
    return res;
}

namespace {

SparseVec symbol_coords(const SymbolVec& v) {
    const long N = v.level();
    SparseVec s;
    for (long a = 0; a < N; ++a)
        if (!v.f(a).is_zero()) s.emplace_back(static_cast<int>(a), v.f(a));
    for (long a = 1; a < N; ++a)
        if (!v.g(a).is_zero()) s.emplace_back(static_cast<int>(N + a), v.g(a));
    return s;
}

// Finds c with v = c * w, if any.
std::optional<Rational> proportional(const SymbolVec& v, const SymbolVec& w) {
    SparseVec sv = symbol_coords(v), sw = symbol_coords(w);
    if (sw.empty()) return sv.empty() ? std::optional<Rational>(Rational()) : std::nullopt;
    if (sv.size() != sw.size()) return std::nullopt;
    Rational c = sv.front().second / sw.front().second;
    for (std::size_t i = 0; i < sv.size(); ++i)
        if (sv[i].first != sw[i].first || sv[i].second != c * sw[i].second) return std::nullopt;
    return c;
}

}  // namespace

bool in_identity_span(const SymbolVec& v) {
    const long N = v.level();
    EchelonBasis<> eb(static_cast<int>(2 * N));
    for (long d : divisors(N))
        if (N / d >= 2) eb.insert(symbol_coords(embed_symbols(divisor_identity_symbols(N / d), N, d)));
    return eb.contains(symbol_coords(v));
}

NullSpaceReport verify_null_space(long N, int M) {
    LinSystem sys = build_system(N);
    EchelonBasis<> eb(sys.cols);
    for (int r = 0; r < sys.rows; ++r) eb.insert(sys.sparse_row(r));

    NullSpaceReport rep;
    rep.level = N;
    rep.kernel_dim = sys.rows - eb.rank();
    rep.expected_kernel_dim = static_cast<int>(num_divisors(N)) - 1;
    SeriesCache cache(N, M);
    EchelonBasis<> span(sys.rows);
    bool all_ok = rep.kernel_dim == rep.expected_kernel_dim;
    for (long d : divisors(N)) {
        if (d == N) continue;
        NullSpaceDivisor nd{d, true, false, std::nullopt, SymbolVec(N), false, Rational()};
        auto n = null_vector(N, d);
        for (int c = 0; c < sys.cols && nd.annihilates; ++c) {
            Rational s;
            for (int r = 0; r < sys.rows; ++r)
                if (int x = sys.at(r, c); x != 0) s += n[static_cast<std::size_t>(r)] * Rational(x);
            nd.annihilates = s.is_zero();
        }
        span.insert(sparse_from_dense(n));
        nd.pairing = pair_with_rhs(sys, n);
        QSeries series = symbolvec_to_series(nd.pairing, cache);
        nd.first_bad_power = series.first_difference(cache.zero());
        nd.series_vanishes = !nd.first_bad_power.has_value();
        auto c = proportional(nd.pairing, embed_symbols(divisor_identity_symbols(N / d), N, d));
        nd.decomposes = c.has_value() && !c->is_zero();
        if (c) nd.scale = *c;
        all_ok = all_ok && nd.annihilates && nd.series_vanishes && nd.decomposes;
        rep.divisors.push_back(std::move(nd));
    }
    rep.vectors_independent = span.rank() == rep.expected_kernel_dim;
    rep.pass = all_ok && rep.vectors_independent;
    return rep;
}

SolveResult solve(long N, const std::map<ColLabel, SymbolVec>& free_values, int M) {
    LinSystem sys = build_system(N);
    EchelonBasis<SymbolVec> eb(sys.cols);
    SolveResult res;
    SeriesCache cache(N, M);
    res.consistent = true;
    for (int r = 0; r < sys.rows; ++r) {
        SymbolVec payload = sys.rhs[static_cast<std::size_t>(r)];
        if (eb.insert(sys.sparse_row(r), payload)) continue;
        ResidualRow rr{sys.row_labels[static_cast<std::size_t>(r)], payload, false, false};
        rr.series_vanishes = symbolvec_to_series(payload, cache).is_zero();
        rr.symbolic_vanishes = payload.is_zero() || in_identity_span(payload);
        res.consistent = res.consistent && rr.series_vanishes && rr.symbolic_vanishes;
        res.residual_rows.push_back(std::move(rr));
    }
    eb.make_reduced();

    std::set<int> piv;
    for (int c : eb.pivot_columns()) piv.insert(c);
    std::vector<SymbolVec> x(static_cast<std::size_t>(sys.cols), SymbolVec(N));
    for (const auto& [label, value] : free_values) {
        int c = sys.col_index(label);
        if (piv.count(c)) throw std::invalid_argument("solve: " + label.str() + " is a pivot column");
        if (value.level() != N) throw std::invalid_argument("solve: free value has the wrong level");
        x[static_cast<std::size_t>(c)] = value;
    }
    for (int c = 0; c < sys.cols; ++c)
        (piv.count(c) ? res.pivot_cols : res.free_cols).push_back(sys.col_labels[static_cast<std::size_t>(c)]);

    for (const auto& [lead, row] : eb.rows()) {
        SymbolVec v = row.payload;
        for (const auto& [c, coef] : row.vec)
            if (c != lead) v.add_scaled(x[static_cast<std::size_t>(c)], -coef);
        x[static_cast<std::size_t>(lead)] = std::move(v);
    }

    res.assignment = GammaLambdaAssignment(N);
    for (int c = 0; c < sys.cols; ++c) {
        const ColLabel& l = sys.col_labels[static_cast<std::size_t>(c)];
        (l.kind == ColKind::Lambda ? res.assignment.lambda(l.a, l.b) : res.assignment.gamma(l.a, l.b)) =
            x[static_cast<std::size_t>(c)];
    }
    return res;
}

std::vector<EquationCheck> check_assignment(const AssignmentSeries& asg, SeriesCache& cache) {
    const long N = asg.level;
    if (cache.level() != N || cache.truncation() != asg.truncation)
        throw std::invalid_argument("check_assignment: cache does not match the assignment");
    std::vector<EquationCheck> out;
    auto record = [&](std::string kind, long a, long b, const QSeries& lhs, const QSeries& rhs) {
        auto bad = lhs.first_difference(rhs);
        EquationCheck c{kind + "(" + std::to_string(a) + "," + std::to_string(b) + ")", a, b, !bad, bad, {}, {}};
        if (bad) {
            c.lhs_at_bad = lhs[*bad].str();
            c.rhs_at_bad = rhs[*bad].str();
        }
        out.push_back(std::move(c));
    };
    for (long a = 0; a < N; ++a)
        for (long b = a; b < N; ++b) {
            if (a == b) {
                record("stuffle", a, b, asg.gamma_at(a, a) - asg.lambda_at(a, a), cache.g(a, 2));
            } else {
                QSeries lhs = asg.gamma_at(a, b) + asg.gamma_at(b, a);
                lhs.add_scaled(asg.lambda_at(a, b), Rational(-2));
                record("stuffle", a, b, lhs, cache.zero());
            }
        }
    for (long a = 0; a < N; ++a)
        for (long b = a; b < N; ++b) {
            QSeries lhs = asg.gamma_at(a + b, a) + asg.gamma_at(a + b, b);
            lhs.add_scaled(asg.lambda_at(a, b), Rational(-2));
            record("shuffle", a, b, lhs, cache.f2(a) + cache.f2(b));
        }
    return out;
}

std::vector<EquationCheck> check_assignment(const GammaLambdaAssignment& asg, int M) {
    SeriesCache cache(asg.level(), M);
    return check_assignment(AssignmentSeries::evaluate(asg, cache), cache);
}

}  // namespace eisen
