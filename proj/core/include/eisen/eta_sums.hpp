#pragma once

#include <vector>

#include "eisen/arith.hpp"
#include "eisen/cyclotomic.hpp"

namespace eisen {

// Block sums of N-th roots of unity over residues with prescribed prime valuations.
//
// For N = prod p_t^{k_t}, alpha_t <= k_t (not all equal to k_t) and ell_t >= 0:
//   sum over 1 <= j < N with min(v_{p_t}(j), k_t) = alpha_t for all t
//   of eta^{j * prod p_t^{ell_t}}.
// alpha_t = k_t therefore means p_t^{k_t} divides j.

// Direct enumeration over 1 <= j < N.
CycNum eta_block_sum(long N, const std::vector<int>& alpha, const std::vector<int>& ell);
// The product formula: zero if some ell_t <= k_t - alpha_t - 2, otherwise
// prod_{ell_t = k_t-alpha_t-1} (-p_t^{ell_t}) * prod_{others} phi(p_t^{k_t-alpha_t}).
Rational eta_block_sum_closed_form(long N, const std::vector<int>& alpha, const std::vector<int>& ell);

}  // namespace eisen
