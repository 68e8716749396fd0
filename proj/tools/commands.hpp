#pragma once

#include <iosfwd>
#include <string>

#include "eisen/assignment.hpp"
#include "eisen/report.hpp"

namespace eisen::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kFlagged = 3 };

// Runs the command line and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// EISEN_DEFAULT_TRUNCATION when set to a positive integer, else 50.
int default_truncation();

nlohmann::json symbol_to_json(const SymbolVec& v);
SymbolVec symbol_from_json(const nlohmann::json& j, long N);
nlohmann::json assignment_to_json(const GammaLambdaAssignment& asg);
GammaLambdaAssignment assignment_from_json(const nlohmann::json& j);

// paper-n1, paper-n2, paper-n3 (closed forms at levels 1-3), solved-zero (any
// level), or a path to an assignment JSON file.
GammaLambdaAssignment named_assignment(const std::string& name, long N, int M);

Report verify_eta_sums(long N, int max_ell);
Report verify_divisor_identity(long N, long max_m, unsigned jobs);
Report verify_double_shuffle(long N, int max_weight, int M, const std::string& assignment, bool unchecked,
                             unsigned jobs);
Report verify_i_identities(long N, int max_weight);
Report verify_null_space(long N, int M);
Report verify_beta(long N, int max_order);
Report solve_gamma(long N, const std::string& free, int M, bool with_series);
Report rank(long N);
Report dz_dims(long N, int k, bool pure);
Report dz_sum_formula(long N, int k, long residue);  // residue < 0: all residues
Report numeric_dbsf(long N, int max_weight, double tol, unsigned jobs);
Report numeric_frakz(long N, int max_n, double tol);
Report numeric_sign_probe(long N, double tol);
Report export_series(long N, const std::string& kind, long a, long b, int r, int s, int M);

}  // namespace eisen::cli
