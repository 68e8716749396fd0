#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eisen/sparse_elim.hpp"

namespace eisen {

// Generators of the formal double zeta space at level N and weight k:
// doubles Z^{a,b}_{r,k-r} (lex by a, b, r) followed by singles Z^a_k.
// The pure space keeps pairs with gcd(a,b,N) = 1 and singles with gcd(a,N) = 1.
class DZBasis {
public:
    struct Generator {
        bool single;
        long a;
        long b;  // 0 for singles
        int r;   // k for singles
        std::string str(int k) const;
    };

    DZBasis(long N, int k, bool pure);

    long level() const { return n_; }
    int weight() const { return k_; }
    bool pure() const { return pure_; }
    int size() const { return static_cast<int>(gens_.size()); }
    int num_doubles() const { return num_doubles_; }
    const std::vector<Generator>& generators() const { return gens_; }

    // -1 when the generator is not in the basis.
    int double_index(long a, long b, int r) const;
    int single_index(long a) const;
    bool has_pair(long a, long b) const;

private:
    long n_;
    int k_;
    bool pure_;
    int num_doubles_ = 0;
    std::vector<Generator> gens_;
    std::map<std::tuple<bool, long, long, int>, int> index_;
};

struct RelationIndex {
    long a;
    long b;
    int r;
    int s;
};

// Z^{a,b}_{r,s} + Z^{b,a}_{s,r} + d_{ab} Z^a_k
//   - sum_{i+j=k} [C(i-1,r-1) Z^{a+b,b}_{i,j} + C(i-1,s-1) Z^{a+b,a}_{i,j}]
SparseVec relation_row(const DZBasis& basis, long a, long b, int r, int s);

// One row per orbit of (a,b;r,s) <-> (b,a;s,r).
struct RelationMatrix {
    DZBasis basis;
    std::vector<SparseVec> rows;
    std::vector<RelationIndex> labels;
};
RelationMatrix build_relations(long N, int k, bool pure);

struct DZDims {
    int generators;
    int doubles;
    int relations;          // deduplicated rows
    int nominal_relations;  // k N^2 / 2, or (k-1)(pairs + singles)/2 when pure; undeduplicated count halved
    int rank;
    int dim;                // generators - rank
    int doubles_rank;       // rank after dropping single coordinates
    int dim_mod_singles;    // doubles - doubles_rank
    Rational lower_bound;   // ((k-2) N^2 + 2N) / 2
};
DZDims dz_dim(long N, int k, bool pure);

// Odd: sum_{r odd} Z^{a,a}_{r,k-r} - (2 Z^{0,a}_{1,k-1} + 2 Z^{2a,a}_{1,k-1} - Z^a_k + 2 d_{a0} Z^0_k) / 4
// Even: sum_{1<r<k even} Z^{a,a}_{r,k-r} - (2 Z^{0,a}_{1,k-1} - 2 Z^{2a,a}_{1,k-1} + Z^a_k + 2 d_{a0} Z^0_k) / 4
SparseVec sum_formula_vector(const DZBasis& basis, long a, bool odd);

struct SumFormulaCheck {
    long level;
    int weight;
    long residue;
    bool odd_pass;
    bool even_pass;
    bool pass() const { return odd_pass && even_pass; }
};
SumFormulaCheck verify_sum_formula(long N, int k, long a);

// Homogeneous polynomial in X, Y: (x degree, y degree) -> coefficient.
using BivariatePoly = std::map<std::pair<int, int>, Rational>;
// Keyed by residue pair (a, b).
using PolyFamily = std::map<std::pair<long, long>, BivariatePoly>;

struct PolyRelation {
    SparseVec doubles;  // over the first num_doubles() coordinates of the non-pure basis
    bool in_row_space;  // modulo singles
};

// Expands sum F_{a,b}(X_b,Y_a) + F_{a,b}(Y_b,X_a) - F_{a,b}(X_{a+b}+Y_b, X_{a+b}) - F_{a,b}(X_{a+b}, X_{a+b}+Y_a)
// and reads c^{x,y}_{i,j} off the coefficient of X_x^{i-1} Y_y^{j-1} divided by C(k-2,i-1).
// Throws if some F_{a,b} is not homogeneous of degree k-2.
PolyRelation polynomial_to_relation(long N, int k, const PolyFamily& F);

// Some F with polynomial_to_relation(F).doubles == v, or nullopt if v is not
// a relation modulo singles.
std::optional<PolyFamily> relation_to_polynomial(long N, int k, const SparseVec& v);

}  // namespace eisen
