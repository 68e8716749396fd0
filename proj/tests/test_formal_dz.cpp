#include "doctest.h"
#include "eisen/arith.hpp"
#include "eisen/formal_dz.hpp"

using namespace eisen;

namespace {

Rational binom(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
    return r;
}

int dense_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t p = static_cast<std::size_t>(rank);
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[static_cast<std::size_t>(rank)]);
        const auto piv = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c].is_zero()) continue;
            const Rational f = m[r][c] / piv[c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * piv[k];
        }
        ++rank;
    }
    return rank;
}

// The relation written out directly in the basis coordinates.
std::vector<Rational> relation_oracle(const DZBasis& B, long a, long b, int r, int s) {
    const long N = B.level();
    const int k = r + s;
    std::vector<Rational> v(static_cast<std::size_t>(B.size()));
    auto put = [&](int idx, const Rational& c) {
        REQUIRE(idx >= 0);
        v[static_cast<std::size_t>(idx)] += c;
    };
    put(B.double_index(a, b, r), Rational(1));
    put(B.double_index(b, a, s), Rational(1));
    if (a == b) put(B.single_index(a), Rational(1));
    const long c = mod(a + b, N);
    for (int i = 1; i < k; ++i) {
        if (auto x = binom(i - 1, r - 1); !x.is_zero()) put(B.double_index(c, b, i), -x);
        if (auto x = binom(i - 1, s - 1); !x.is_zero()) put(B.double_index(c, a, i), -x);
    }
    return v;
}

std::vector<std::vector<Rational>> dense_rows(const RelationMatrix& m) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : m.rows) out.push_back(sparse_to_dense(row, m.basis.size()));
    return out;
}

}  // namespace

TEST_CASE("generator and relation counts") {
    const DZDims d14 = dz_dim(1, 4, false);
    CHECK(d14.generators == 4);
    CHECK(d14.relations == 2);
    CHECK(d14.nominal_relations == 2);
    for (int k = 2; k <= 10; k += 2) {
        const DZDims d = dz_dim(2, k, false);
        CHECK(d.generators == (k - 1) * 4 + 2);
        CHECK(d.nominal_relations == 2 * k);
    }
    const DZDims p = dz_dim(3, 4, true);
    CHECK(p.generators == 26);
    CHECK(p.doubles == 24);
    CHECK(p.nominal_relations == 15);
    CHECK(p.relations == 13);
    CHECK(p.rank == 13);
    CHECK(p.dim == 13);
    CHECK(p.dim_mod_singles == 11);
}

TEST_CASE("weight two at level one") {
    const DZBasis B(1, 2, false);
    REQUIRE(B.size() == 2);
    CHECK(B.generators()[0].str(2) == "Z^{0,0}_{1,1}");
    CHECK(B.generators()[1].single);
    const DZDims d = dz_dim(1, 2, false);
    CHECK(d.relations == 1);
    CHECK(d.dim == 1);
}

TEST_CASE("relation rows match the written-out relation") {
    for (long N = 1; N <= 4; ++N)
        for (int k = 2; k <= 7; ++k)
            for (bool pure : {false, true}) {
                const RelationMatrix m = build_relations(N, k, pure);
                for (std::size_t i = 0; i < m.rows.size(); ++i) {
                    const auto& l = m.labels[i];
                    CHECK(sparse_to_dense(m.rows[i], m.basis.size()) == relation_oracle(m.basis, l.a, l.b, l.r, l.s));
                }
            }
    CHECK_THROWS_AS(relation_row(DZBasis(2, 4, false), 0, 1, 2, 3), std::invalid_argument);
}

TEST_CASE("exact ranks and the dimension lower bound") {
    for (long N = 1; N <= 4; ++N)
        for (int k = 2; k <= 10; k += 2) {
            const DZDims d = dz_dim(N, k, false);
            CHECK(Rational(d.dim) >= d.lower_bound);
            CHECK(d.dim == d.generators - d.rank);
            if (N <= 3) CHECK(d.rank == dense_rank(dense_rows(build_relations(N, k, false))));
        }
    CHECK(dz_dim(3, 4, true).rank == dense_rank(dense_rows(build_relations(3, 4, true))));
}

TEST_CASE("sum formulas are relations") {
    for (int k = 4; k <= 10; k += 2) CHECK(verify_sum_formula(1, k, 0).pass());
    for (int k = 4; k <= 8; k += 2) CHECK(verify_sum_formula(2, k, 1).pass());
    CHECK(verify_sum_formula(4, 6, 2).pass());
    for (long N = 1; N <= 4; ++N)
        for (int k = 2; k <= 10; k += 2)
            for (long a = 0; a < N; ++a) {
                CHECK(verify_sum_formula(N, k, a).pass());
                // Membership by rank: appending the vector must not raise it.
                const RelationMatrix m = build_relations(N, k, false);
                auto rows = dense_rows(m);
                const int r0 = dense_rank(rows);
                for (bool odd : {true, false}) {
                    auto with = rows;
                    with.push_back(sparse_to_dense(sum_formula_vector(m.basis, a, odd), m.basis.size()));
                    CHECK(dense_rank(with) == r0);
                }
            }
    CHECK_THROWS_AS(verify_sum_formula(2, 5, 0), std::invalid_argument);
}

TEST_CASE("a perturbed sum formula is not a relation") {
    const RelationMatrix m = build_relations(2, 6, false);
    SparseVec v = sum_formula_vector(m.basis, 1, true);
    v.emplace_back(m.basis.single_index(1), Rational(1, 3));
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVec merged;
    for (const auto& e : v) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(e);
    }
    auto rows = dense_rows(m);
    const int r0 = dense_rank(rows);
    rows.push_back(sparse_to_dense(merged, m.basis.size()));
    CHECK(dense_rank(rows) == r0 + 1);
}

TEST_CASE("polynomial relations: monomials and round trips") {
    for (long N = 1; N <= 3; ++N)
        for (int k = 3; k <= 6; ++k) {
            const RelationMatrix m = build_relations(N, k, false);
            const int nd = m.basis.num_doubles();
            for (long a = 0; a < N; ++a)
                for (long b = 0; b < N; ++b)
                    for (int r = 1; r < k; ++r) {
                        const int s = k - r;
                        PolyFamily F;
                        F[{a, b}][{r - 1, s - 1}] = binom(k - 2, r - 1);
                        const PolyRelation pr = polynomial_to_relation(N, k, F);
                        SparseVec want;
                        for (const auto& e : relation_row(m.basis, b, a, r, s))
                            if (e.first < nd) want.push_back(e);
                        CHECK(pr.doubles == want);
                        CHECK(pr.in_row_space);
                        const auto back = relation_to_polynomial(N, k, pr.doubles);
                        REQUIRE(back.has_value());
                        CHECK(polynomial_to_relation(N, k, *back).doubles == pr.doubles);
                    }
        }
    PolyFamily bad;
    bad[{0, 0}][{1, 0}] = Rational(1);
    CHECK_THROWS_AS(polynomial_to_relation(1, 4, bad), std::invalid_argument);
}

TEST_CASE("vectors outside the relation space have no polynomial") {
    const long N = 2;
    const int k = 4;
    const DZBasis B(N, k, false);
    SparseVec v{{B.double_index(0, 1, 1), Rational(1)}};
    CHECK_FALSE(relation_to_polynomial(N, k, v).has_value());
}
