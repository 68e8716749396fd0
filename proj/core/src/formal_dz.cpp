#include "eisen/formal_dz.hpp"

#include <set>
#include <stdexcept>

#include "eisen/arith.hpp"

namespace eisen {

std::string DZBasis::Generator::str(int k) const {
    if (single) return "Z^{" + std::to_string(a) + "}_{" + std::to_string(k) + "}";
    return "Z^{" + std::to_string(a) + "," + std::to_string(b) + "}_{" + std::to_string(r) + "," +
           std::to_string(k - r) + "}";
}

DZBasis::DZBasis(long N, int k, bool pure) : n_(N), k_(k), pure_(pure) {
    if (N < 1) throw std::invalid_argument("DZBasis: level must be positive");
    if (k < 2) throw std::invalid_argument("DZBasis: weight must be at least 2");
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b) {
            if (!has_pair(a, b)) continue;
            for (int r = 1; r < k; ++r) {
                index_[{false, a, b, r}] = size();
                gens_.push_back({false, a, b, r});
            }
        }
    num_doubles_ = size();
    for (long a = 0; a < N; ++a) {
        if (pure && gcd_level(a, N) != 1) continue;
        index_[{true, a, 0, k}] = size();
        gens_.push_back({true, a, 0, k});
    }
}

bool DZBasis::has_pair(long a, long b) const { return !pure_ || gcd_level(a, b, n_) == 1; }

int DZBasis::double_index(long a, long b, int r) const {
    auto it = index_.find({false, mod(a, n_), mod(b, n_), r});
    return it == index_.end() ? -1 : it->second;
}

int DZBasis::single_index(long a) const {
    auto it = index_.find({true, mod(a, n_), 0, k_});
    return it == index_.end() ? -1 : it->second;
}

namespace {

class RowBuilder {
public:
    explicit RowBuilder(const DZBasis& b) : basis_(b) {}
    void add_double(long a, long b, int r, const Rational& c) { add(basis_.double_index(a, b, r), c, "double"); }
    void add_single(long a, const Rational& c) { add(basis_.single_index(a), c, "single"); }
    SparseVec finish() {
        SparseVec v;
        for (auto& [col, c] : acc_)
            if (!c.is_zero()) v.emplace_back(col, c);
        return v;
    }

private:
    void add(int col, const Rational& c, const char* what) {
        if (c.is_zero()) return;
        if (col < 0) throw std::logic_error(std::string("relation uses a ") + what + " outside the basis");
        acc_[col] += c;
    }
    const DZBasis& basis_;
    std::map<int, Rational> acc_;
};

}  // namespace

SparseVec relation_row(const DZBasis& basis, long a, long b, int r, int s) {
    const int k = basis.weight();
    if (r < 1 || s < 1 || r + s != k) throw std::invalid_argument("relation_row: need r, s >= 1 with r + s = k");
    const long N = basis.level();
    a = mod(a, N);
    b = mod(b, N);
    RowBuilder row(basis);
    row.add_double(a, b, r, 1);
    row.add_double(b, a, s, 1);
    if (a == b) row.add_single(a, 1);
    for (int i = 1; i < k; ++i) {
        row.add_double(a + b, b, i, -Rational(binomial(i - 1, r - 1)));
        row.add_double(a + b, a, i, -Rational(binomial(i - 1, s - 1)));
    }
    return row.finish();
}

RelationMatrix build_relations(long N, int k, bool pure) {
    RelationMatrix m{DZBasis(N, k, pure), {}, {}};
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b) {
            if (!m.basis.has_pair(a, b)) continue;
            for (int r = 1; r < k; ++r) {
                const int s = k - r;
                // keep the lexicographically smaller of (a,b,r) and (b,a,s)
                if (std::make_tuple(b, a, s) < std::make_tuple(a, b, r)) continue;
                m.rows.push_back(relation_row(m.basis, a, b, r, s));
                m.labels.push_back({a, b, r, s});
            }
        }
    return m;
}

DZDims dz_dim(long N, int k, bool pure) {
    RelationMatrix m = build_relations(N, k, pure);
    const int nd = m.basis.num_doubles();
    EchelonBasis<> full(m.basis.size()), doubles(nd);
    for (const auto& row : m.rows) {
        full.insert(row);
        SparseVec proj;
        for (const auto& e : row)
            if (e.first < nd) proj.push_back(e);
        doubles.insert(std::move(proj));
    }
    DZDims d;
    d.generators = m.basis.size();
    d.doubles = nd;
    d.relations = static_cast<int>(m.rows.size());
    // Pure: (k-1)(|pairs| + |singles|)/2; full: k N^2 / 2.
    d.nominal_relations = pure ? (nd + (k - 1) * (d.generators - nd)) / 2 : static_cast<int>(k * N * N / 2);
    d.rank = full.rank();
    d.dim = d.generators - d.rank;
    d.doubles_rank = doubles.rank();
    d.dim_mod_singles = nd - d.doubles_rank;
    d.lower_bound = Rational((k - 2) * N * N + 2 * N, 2);
    return d;
}

SparseVec sum_formula_vector(const DZBasis& basis, long a, bool odd) {
    const int k = basis.weight();
    const long N = basis.level();
    a = mod(a, N);
    RowBuilder row(basis);
    for (int r = odd ? 1 : 2; r < k; r += 2) row.add_double(a, a, r, 1);
    const Rational q(1, 4);
    row.add_double(0, a, 1, -q * Rational(2));
    row.add_double(2 * a, a, 1, -q * Rational(odd ? 2 : -2));
    row.add_single(a, -q * Rational(odd ? -1 : 1));
    if (a == 0) row.add_single(0, -q * Rational(2));
    return row.finish();
}

SumFormulaCheck verify_sum_formula(long N, int k, long a) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("verify_sum_formula: k must be even and at least 2");
    RelationMatrix m = build_relations(N, k, false);
    EchelonBasis<> eb(m.basis.size());
    for (const auto& row : m.rows) eb.insert(row);
    return {N, k, mod(a, N), eb.contains(sum_formula_vector(m.basis, a, true)),
            eb.contains(sum_formula_vector(m.basis, a, false))};
}

namespace {

// Accumulates labeled bivariate polynomials: block (x,y) holds a polynomial in X_x, Y_y.
using Blocks = std::map<std::pair<long, long>, BivariatePoly>;

void add_term(Blocks& blocks, std::pair<long, long> block, int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    auto& p = blocks[block];
    auto [it, fresh] = p.try_emplace({i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

EchelonBasis<> projected_row_space(const RelationMatrix& m) {
    const int nd = m.basis.num_doubles();
    EchelonBasis<> eb(nd);
    for (const auto& row : m.rows) {
        SparseVec proj;
        for (const auto& e : row)
            if (e.first < nd) proj.push_back(e);
        eb.insert(std::move(proj));
    }
    return eb;
}

}  // namespace

PolyRelation polynomial_to_relation(long N, int k, const PolyFamily& F) {
    const DZBasis basis(N, k, false);
    Blocks blocks;
    for (const auto& [pair, poly] : F) {
        const long a = mod(pair.first, N), b = mod(pair.second, N), ab = mod(a + b, N);
        for (const auto& [deg, c] : poly) {
            const auto [i, j] = deg;
            if (i < 0 || j < 0 || i + j != k - 2)
                throw std::invalid_argument("polynomial_to_relation: F must be homogeneous of degree k-2");
            add_term(blocks, {b, a}, i, j, c);   // F(X_b, Y_a)
            add_term(blocks, {a, b}, j, i, c);   // F(Y_b, X_a)
            for (int t = 0; t <= i; ++t)         // -F(X_{a+b} + Y_b, X_{a+b})
                add_term(blocks, {ab, b}, t + j, i - t, -c * Rational(binomial(i, t)));
            for (int t = 0; t <= j; ++t)         // -F(X_{a+b}, X_{a+b} + Y_a)
                add_term(blocks, {ab, a}, i + t, j - t, -c * Rational(binomial(j, t)));
        }
    }
    std::map<int, Rational> acc;
    for (const auto& [block, poly] : blocks)
        for (const auto& [deg, c] : poly) {
            const int i = deg.first + 1;
            acc[basis.double_index(block.first, block.second, i)] += c / Rational(binomial(k - 2, i - 1));
        }
    PolyRelation out;
    for (auto& [col, c] : acc)
        if (!c.is_zero()) out.doubles.emplace_back(col, c);
    out.in_row_space = projected_row_space(build_relations(N, k, false)).contains(out.doubles);
    return out;
}

namespace {

// Tracks which relation rows combine into a reduced vector.
struct Certificate {
    SparseVec coeffs;
    void add_scaled(const Certificate& o, const Rational& s) { coeffs = sparse_axpy(coeffs, s, o.coeffs); }
    Certificate& operator*=(const Rational& s) {
        for (auto& e : coeffs) e.second *= s;
        return *this;
    }
};

}  // namespace

std::optional<PolyFamily> relation_to_polynomial(long N, int k, const SparseVec& v) {
    const RelationMatrix m = build_relations(N, k, false);
    const int nd = m.basis.num_doubles();
    EchelonBasis<Certificate> eb(nd);
    for (std::size_t t = 0; t < m.rows.size(); ++t) {
        SparseVec proj;
        for (const auto& e : m.rows[t])
            if (e.first < nd) proj.push_back(e);
        Certificate cert{{{static_cast<int>(t), Rational(1)}}};
        eb.insert(std::move(proj), cert);
    }
    // v - sum mu_t row_t reduces to zero exactly when v = sum mu_t row_t.
    SparseVec rest = v;
    Certificate cert;
    eb.reduce(rest, cert);
    if (!rest.empty()) return std::nullopt;

    // Row (a,b;r,s) is the image of F_{b,a} = C(k-2,r-1) X^{r-1} Y^{s-1}.
    PolyFamily F;
    for (const auto& [t, mu] : cert.coeffs) {
        const RelationIndex& l = m.labels[static_cast<std::size_t>(t)];
        auto& poly = F[{l.b, l.a}];
        Rational c = -mu * Rational(binomial(k - 2, l.r - 1));
        auto [it, fresh] = poly.try_emplace({l.r - 1, l.s - 1}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) poly.erase(it);
        }
    }
    return F;
}

}  // namespace eisen
