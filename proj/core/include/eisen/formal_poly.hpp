#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "eisen/rational.hpp"

namespace eisen {

// Rational combinations of X^i Y^j G[a,h] B[c,p], where G[a,h] and B[c,p] are
// free commuting symbols for the weight-h Eisenstein series and the weight-p
// constants at residue a (resp. c) mod N. B obeys its parity rule
// B[-c,p] = (-1)^{p-1} B[c,p], applied on insertion, so B[c,p] = 0 when
// c = -c mod N and p is even.
class FormalPoly {
public:
    struct Monomial {
        int x_deg;
        int y_deg;
        long g_res;
        int g_wt;
        long b_res;
        int b_wt;
        friend auto operator<=>(const Monomial&, const Monomial&) = default;
    };

    FormalPoly(long N, int k) : n_(N), k_(k) {}

    long level() const { return n_; }
    int weight() const { return k_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Throws if the X,Y degree is not k-2 or the weights are out of range.
    void add(int x_deg, int y_deg, long g_res, int g_wt, long b_res, int b_wt, const Rational& c);

    FormalPoly& operator+=(const FormalPoly& o);
    FormalPoly& operator-=(const FormalPoly& o);
    friend bool operator==(const FormalPoly&, const FormalPoly&) = default;

    std::string str() const;

private:
    long n_;
    int k_;
    std::map<Monomial, Rational> terms_;
};

// One bilinear term c * G[a,h] B[c,p] of I_{r,s}.
struct GBTerm {
    long g_res;
    int g_wt;
    long b_res;
    int b_wt;
    Rational coef;
};

// I_{r,s}^{a,b} = G[a,r] B[b,s]
//   + sum_{h+p=r+s, h>=1} B[a-b,p] ((-1)^s C(p-1,s-1) G[a,h] + (-1)^{p-r} C(p-1,r-1) G[b,h]).
std::vector<GBTerm> i_terms(long N, long a, long b, int r, int s);

// Linear form u X + v Y.
struct LinearForm {
    long u;
    long v;
};

// sum_{r+s=k} I_{r,s}^{a,b} L1^{r-1} L2^{s-1}.
FormalPoly i_generating(long N, int k, long a, long b, LinearForm l1, LinearForm l2);

struct IIdentityRow {
    long a;
    long b;
    bool swap_pass;   // I^{a,b}(X,Y) + I^{b,a}(Y,X) equals the product side
    bool shift_pass;  // I^{a+b,a}(X+Y,X) + I^{a+b,b}(X+Y,Y) equals the product side
};

struct IIdentityReport {
    long level;
    int weight;
    std::vector<IIdentityRow> rows;
    bool pass;
};

// For k = 2 both forms reduce to G[a,1]B[b,1] + G[b,1]B[a,1] = I_{1,1}^{a+b,b} + I_{1,1}^{a+b,a}.
IIdentityReport verify_I_identities(long N, int k);

}  // namespace eisen
