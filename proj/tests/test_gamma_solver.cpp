#include <algorithm>
#include <set>

#include "doctest.h"
#include "eisen/arith.hpp"
#include "eisen/divisor.hpp"
#include "eisen/gamma_solver.hpp"
#include "support.hpp"

using namespace eisen;

namespace {

SymbolVec F(long N, long a, Rational c = 1) { return SymbolVec::F(N, a, c); }
SymbolVec G(long N, long a, Rational c = 1) { return SymbolVec::G(N, a, c); }

ColLabel lam(long a, long b) { return {ColKind::Lambda, std::min(a, b), std::max(a, b)}; }
ColLabel gam(long a, long b) { return {ColKind::Gamma, a, b}; }

// Rows re-derived from the weight-two stuffle/shuffle equations:
//   shuffle(a,b)            -> LS1(a,b)
//   stuffle(a,b) - shuffle  -> LS2(a,b), a < b
//   stuffle(a,a) - shuffle(a,a)/2 -> LS3(a), a >= 1
struct OracleRow {
    RowLabel label;
    std::map<ColLabel, int> coef;
    SymbolVec rhs;
};

std::vector<OracleRow> oracle_rows(long N) {
    std::vector<OracleRow> rows;
    auto shuffle = [&](long a, long b) {
        OracleRow r{{RowKind::LS1, a, b}, {}, F(N, a) + F(N, b)};
        r.coef[gam(mod(a + b, N), a)] += 1;
        r.coef[gam(mod(a + b, N), b)] += 1;
        r.coef[lam(a, b)] -= 2;
        return r;
    };
    for (long a = 0; a < N; ++a)
        for (long b = a; b < N; ++b) rows.push_back(shuffle(a, b));
    for (long a = 0; a < N; ++a)
        for (long b = a + 1; b < N; ++b) {
            OracleRow sh = shuffle(a, b);
            OracleRow r{{RowKind::LS2, a, b}, {}, -sh.rhs};
            r.coef[gam(a, b)] += 1;
            r.coef[gam(b, a)] += 1;
            r.coef[lam(a, b)] -= 2;
            for (auto [c, x] : sh.coef) r.coef[c] -= x;
            rows.push_back(r);
        }
    for (long a = 1; a < N; ++a) {
        OracleRow r{{RowKind::LS3, a, 0}, {}, G(N, a) - F(N, a)};
        r.coef[gam(a, a)] += 1;
        r.coef[lam(a, a)] -= 1;
        r.coef[gam(mod(2 * a, N), a)] -= 1;
        r.coef[lam(a, a)] += 1;
        rows.push_back(r);
    }
    return rows;
}

// Dense rank over Q by plain Gaussian elimination.
int dense_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t p = static_cast<std::size_t>(rank);
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[static_cast<std::size_t>(rank)]);
        const auto& piv = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c].is_zero()) continue;
            const Rational f = m[r][c] / piv[c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * piv[k];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> dense(const LinSystem& s) {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(s.rows), std::vector<Rational>(static_cast<std::size_t>(s.cols)));
    for (int r = 0; r < s.rows; ++r)
        for (int c = 0; c < s.cols; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Rational(s.at(r, c));
    return m;
}

bool all_pass(const std::vector<EquationCheck>& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& c) { return c.pass; });
}

std::set<std::string> failing(const std::vector<EquationCheck>& v) {
    std::set<std::string> out;
    for (const auto& c : v)
        if (!c.pass) out.insert(c.label);
    return out;
}

std::string eq_label(const char* kind, long a, long b) {
    return std::string(kind) + "(" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) + ")";
}

QSeries bump(long N, int M) {
    QSeries q(N, M);
    q[1] = CycNum::one(N);
    return q;
}

}  // namespace

TEST_CASE("level-1 system") {
    const LinSystem s = build_system(1);
    REQUIRE(s.rows == 1);
    REQUIRE(s.cols == 2);
    CHECK(s.at(0, 0) == -2);
    CHECK(s.at(0, 1) == 2);
    CHECK(s.rhs[0] == F(1, 0, 2));
}

TEST_CASE("level-2 system matches the hand-derived 5x7 matrix") {
    // Columns lambda00 lambda01 lambda11 gamma01 gamma00 gamma11 gamma10.
    // Rows in the order LS1(0,0) LS1(0,1) LS1(1,1) LS3(1) LS2(0,1).
    const int want[5][7] = {{-2, 0, 0, 0, 2, 0, 0},
                            {0, -2, 0, 0, 0, 1, 1},
                            {0, 0, -2, 2, 0, 0, 0},
                            {0, 0, 0, -1, 0, 1, 0},
                            {0, 0, 0, 1, 0, -1, 0}};
    // LS1(a,a) carries 2F_a: the shuffle equation counts gamma^{2a,a} twice and F_a twice.
    const SymbolVec rhs[5] = {F(2, 0, 2), F(2, 0) + F(2, 1), F(2, 1, 2), G(2, 1) - F(2, 1), -F(2, 0) - F(2, 1)};
    const LinSystem s = build_system(2);
    REQUIRE(s.rows == 5);
    REQUIRE(s.cols == 7);
    const std::vector<ColLabel> cols{lam(0, 0), lam(0, 1), lam(1, 1), gam(0, 1), gam(0, 0), gam(1, 1), gam(1, 0)};
    CHECK(s.col_labels == cols);
    const int perm[5] = {0, 1, 2, 4, 3};
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 7; ++c) CHECK(s.at(perm[r], c) == want[r][c]);
        CHECK(s.rhs[static_cast<std::size_t>(perm[r])] == rhs[r]);
    }
}

TEST_CASE("system rows agree with the re-derived weight-two equations") {
    for (long N = 1; N <= 9; ++N) {
        const LinSystem s = build_system(N);
        CHECK(s.rows == N * N + N - 1);
        CHECK(s.cols == (3 * N * N + N) / 2);
        CHECK(std::all_of(s.entries.begin(), s.entries.end(), [](int x) { return x >= -2 && x <= 2; }));
        const auto rows = oracle_rows(N);
        REQUIRE(rows.size() == static_cast<std::size_t>(s.rows));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            CHECK(s.row_labels[r] == rows[r].label);
            CHECK(s.rhs[r] == rows[r].rhs);
            for (int c = 0; c < s.cols; ++c) {
                const auto it = rows[r].coef.find(s.col_labels[static_cast<std::size_t>(c)]);
                CHECK(s.at(static_cast<int>(r), c) == (it == rows[r].coef.end() ? 0 : it->second));
            }
        }
    }
}

TEST_CASE("rank, nullity and free columns") {
    const RankResult r2 = rank_and_pivots(2);
    CHECK(r2.rank == 4);
    const std::vector<ColLabel> free2{gam(0, 0), gam(1, 1), gam(1, 0)};
    CHECK(r2.free == free2);
    CHECK(rank_and_pivots(6).rank == 38);
    for (long N = 1; N <= 12; ++N) {
        const RankResult r = rank_and_pivots(N);
        CHECK(r.rank == N * N + N - num_divisors(N));
        CHECK(r.rank == dense_rank(dense(build_system(N))));
        CHECK(r.nullity == num_divisors(N) - 1);
        CHECK(r.rank + r.nullity == N * N + N - 1);
        CHECK(r.matches_expected_free);
        CHECK(r.free == expected_free_columns(N));
    }
}

TEST_CASE("left null vectors") {
    auto ones_on = [](const LinSystem& s, const std::vector<Rational>& n) {
        std::vector<std::string> out;
        for (int r = 0; r < s.rows; ++r)
            if (!n[static_cast<std::size_t>(r)].is_zero()) {
                CHECK(n[static_cast<std::size_t>(r)] == Rational(1));
                out.push_back(s.row_labels[static_cast<std::size_t>(r)].str());
            }
        return out;
    };
    const LinSystem s2 = build_system(2);
    CHECK(ones_on(s2, null_vector(2, 1)) == std::vector<std::string>{"LS2(0,1)", "LS3(1)"});
    CHECK(pair_with_rhs(s2, null_vector(2, 1)) == G(2, 1) - F(2, 0) - F(2, 1, 2));

    const LinSystem s3 = build_system(3);
    CHECK(ones_on(s3, null_vector(3, 1)) ==
          std::vector<std::string>{"LS2(0,1)", "LS2(0,2)", "LS2(1,2)", "LS3(1)", "LS3(2)"});
    CHECK(pair_with_rhs(s3, null_vector(3, 1)) == G(3, 1) + G(3, 2) - F(3, 0, 2) - F(3, 1, 3) - F(3, 2, 3));

    CHECK(ones_on(build_system(4), null_vector(4, 2)) == std::vector<std::string>{"LS2(0,2)", "LS3(2)"});

    for (long N = 2; N <= 12; ++N) {
        const LinSystem s = build_system(N);
        for (long d : divisors(N)) {
            if (d == N) continue;
            const auto n = null_vector(N, d);
            for (int c = 0; c < s.cols; ++c) {
                Rational acc;
                for (int r = 0; r < s.rows; ++r) acc += n[static_cast<std::size_t>(r)] * Rational(s.at(r, c));
                CHECK(acc.is_zero());
            }
            CHECK(pair_with_rhs(s, n) == embed_symbols(divisor_identity_symbols(N / d), N, d));
        }
    }
}

TEST_CASE("null space report") {
    const NullSpaceReport r1 = verify_null_space(1, 20);
    CHECK(r1.kernel_dim == 0);
    CHECK(r1.divisors.empty());
    CHECK(r1.pass);
    const NullSpaceReport r2 = verify_null_space(2, 200);
    CHECK(r2.kernel_dim == 1);
    CHECK(r2.pass);
    const NullSpaceReport r12 = verify_null_space(12, 40);
    CHECK(r12.kernel_dim == 5);
    CHECK(r12.vectors_independent);
    CHECK(r12.pass);
    for (const auto& d : r12.divisors) CHECK(d.scale == Rational(1));
}

TEST_CASE("identity span") {
    CHECK(in_identity_span(divisor_identity_symbols(6) * Rational(3, 7)));
    CHECK(in_identity_span(embed_symbols(divisor_identity_symbols(2), 6, 3) - divisor_identity_symbols(6)));
    CHECK_FALSE(in_identity_span(F(6, 1)));
    CHECK_FALSE(in_identity_span(G(3, 1) - F(3, 1)));
    CHECK(in_identity_span(SymbolVec(5)));
}

TEST_CASE("level-2 solution with zero free values") {
    const SolveResult r = solve(2, {}, 60);
    REQUIRE(r.consistent);
    const auto& x = r.assignment;
    // Hand solution, equal to ours modulo G1 = F0 + 2F1.
    const SymbolVec l01 = (F(2, 1) - G(2, 1)) * Rational(1, 2);
    CHECK(x.lambda(0, 0) == -F(2, 0));
    CHECK(in_identity_span(x.lambda(0, 1) - l01));
    CHECK(in_identity_span(x.lambda(1, 1) + G(2, 1)));
    CHECK(x.gamma(0, 1) == x.lambda(0, 1) * Rational(2));
    CHECK(x.gamma(0, 0).is_zero());
    CHECK(x.gamma(1, 0).is_zero());
    CHECK(x.gamma(1, 1).is_zero());
    CHECK(symbolvec_to_series(x.lambda(0, 1) - l01, 200).is_zero());
    CHECK(all_pass(check_assignment(x, 100)));
}

TEST_CASE("level-1 back-substitution") {
    const SymbolVec c = F(1, 0, Rational(5, 3));
    const SolveResult r = solve(1, {{gam(0, 0), c}}, 30);
    CHECK(r.assignment.lambda(0, 0) == c - F(1, 0));
    CHECK(r.assignment.gamma(0, 0) == c);
    CHECK(all_pass(check_assignment(r.assignment, 30)));
}

TEST_CASE("level-3 solution with zero free values") {
    const SolveResult r = solve(3, {}, 60);
    REQUIRE(r.consistent);
    const auto& x = r.assignment;
    CHECK(x.lambda(0, 0) == -F(3, 0));
    CHECK(in_identity_span(x.lambda(0, 1) - (G(3, 1) - F(3, 0) - F(3, 1, 2)) * Rational(1, 2)));
    CHECK(in_identity_span(x.lambda(1, 1) + F(3, 1)));
    CHECK(in_identity_span(x.lambda(0, 2) + (F(3, 0) + F(3, 2)) * Rational(1, 2)));
    CHECK(in_identity_span(x.gamma(0, 1) - (G(3, 1) - F(3, 0) - F(3, 1, 2))));
    CHECK(in_identity_span(x.gamma(0, 2) + F(3, 0) + F(3, 2)));
    CHECK(in_identity_span(x.gamma(1, 2) - (F(3, 2) - G(3, 2))));
    CHECK(in_identity_span(x.gamma(1, 1) - (G(3, 1) - F(3, 1))));
    // lambda^{1,2} and lambda^{2,2} are forced to (F2 - G2)/2 and -G2.
    CHECK(in_identity_span(x.lambda(1, 2) - (F(3, 2) - G(3, 2)) * Rational(1, 2)));
    CHECK(in_identity_span(x.lambda(2, 2) + G(3, 2)));
    CHECK(all_pass(check_assignment(x, 100)));
}

TEST_CASE("level-3 alternative with lambda^{1,2} = G2/2 is not a solution") {
    GammaLambdaAssignment x = solve(3, {}, 30).assignment;
    x.lambda(1, 2) = G(3, 2, Rational(1, 2));
    x.lambda(2, 2) = G(3, 2);
    const auto bad = failing(check_assignment(x, 40));
    CHECK(bad == std::set<std::string>{"stuffle(1,2)", "stuffle(2,2)", "shuffle(1,2)", "shuffle(2,2)"});
}

TEST_CASE("closed-form assignments at levels 1 to 3") {
    for (long N = 1; N <= 3; ++N) CHECK(all_pass(check_assignment(GammaLambdaAssignment::closed_form(N), 200)));
    CHECK_THROWS_AS(GammaLambdaAssignment::closed_form(4), std::invalid_argument);
    // Alternative level-2 choice with every lambda zero.
    GammaLambdaAssignment kt(2);
    kt.gamma(0, 0) = F(2, 0);
    kt.gamma(0, 1) = F(2, 1);
    kt.gamma(1, 0) = -F(2, 1);
    kt.gamma(1, 1) = G(2, 1);
    CHECK(all_pass(check_assignment(kt, 200)));
}

TEST_CASE("solutions with random free values satisfy every equation") {
    for (long N = 1; N <= 6; ++N) {
        std::map<ColLabel, SymbolVec> free;
        for (const auto& c : expected_free_columns(N)) {
            SymbolVec v(N);
            for (long a = 0; a < N; ++a) {
                v.f(a) = test::random_rational();
                if (a > 0) v.g(a) = test::random_rational();
            }
            free[c] = v;
        }
        const SolveResult r = solve(N, free, 40);
        REQUIRE(r.consistent);
        for (const auto& [c, v] : free) CHECK(c.kind == ColKind::Gamma);
        for (const auto& [c, v] : free) CHECK(r.assignment.gamma(c.a, c.b) == v);
        CHECK(all_pass(check_assignment(r.assignment, 40)));
    }
    CHECK_THROWS(solve(2, {{lam(0, 0), F(2, 0)}}, 10));
}

TEST_CASE("perturbations fail exactly the equations they touch") {
    const int M = 20;
    for (long N = 1; N <= 4; ++N) {
        SeriesCache cache(N, M);
        const GammaLambdaAssignment base = solve(N, {}, M).assignment;
        for (long a = 0; a < N; ++a)
            for (long b = 0; b < N; ++b) {
                AssignmentSeries s = AssignmentSeries::evaluate(base, cache);
                s.gamma_at(a, b) += bump(N, M);
                std::set<std::string> want{eq_label("stuffle", a, b)};
                for (long x = 0; x < N; ++x)
                    for (long y = x; y < N; ++y)
                        if (mod(x + y, N) == a && (x == b || y == b)) want.insert(eq_label("shuffle", x, y));
                CHECK(failing(check_assignment(s, cache)) == want);

                if (a > b) continue;
                AssignmentSeries t = AssignmentSeries::evaluate(base, cache);
                t.add_to_lambda(a, b, bump(N, M));
                CHECK(failing(check_assignment(t, cache)) ==
                      std::set<std::string>{eq_label("stuffle", a, b), eq_label("shuffle", a, b)});
            }
    }
}

TEST_CASE("failing checks report both coefficients") {
    GammaLambdaAssignment x = GammaLambdaAssignment::closed_form(2);
    x.lambda(1, 1) = SymbolVec(2);
    const auto checks = check_assignment(x, 10);
    const auto it = std::find_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; });
    REQUIRE(it != checks.end());
    CHECK(it->first_bad_power.has_value());
    CHECK_FALSE(it->lhs_at_bad.empty());
    CHECK(it->lhs_at_bad != it->rhs_at_bad);
}
