#pragma once

#include <string>
#include <vector>

#include "frobq/qseries.hpp"

namespace frobq {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  // first counterexample when !ok, empty otherwise
};

bool all_ok(const std::vector<CheckResult>& results);

// Identity suites shared by the command-line front end and the acceptance
// driver. Negative kmax/nmax/wmax or nonpositive prec pick per-suite defaults.

// Triple-product and eta/Klein closed forms against the theta lattice sums.
std::vector<CheckResult> verify_jtp(Rat prec = Rat(-1));
// The shifted-theta square, the two mixed-product expansions, and the
// two-six theta relations.
std::vector<CheckResult> verify_lemmas(long long lmax = -1, Rat prec = Rat(-1));
// Sum of h-entries times two-variable thetas equals the k-th power of the
// shifted Jacobi theta.
std::vector<CheckResult> verify_reconstruction(long long kmax = -1,
                                               Rat prec = Rat(-1));
// Classical product formulas against the coefficient-extraction series.
std::vector<CheckResult> verify_formulas(Rat prec = Rat(-1));
// The published k = 4 congruence table, conjectural rows labeled.
std::vector<CheckResult> verify_congruences(long long n_max = -1);
// Deficit DP vs exhaustive paths, deficit-equals-weight, and series
// convergence of the deficit polynomials.
std::vector<CheckResult> verify_motzkin(long long kmax = -1, long long n = -1,
                                        long long wmax = -1);

struct SuiteOptions {
  long long kmax = -1;
  Rat prec = Rat(-1);
  long long nmax = -1;
};

// Dispatch by suite name: jtp | lemmas | reconstruction | formulas |
// congruences | motzkin. Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const SuiteOptions& opt = {});

}  // namespace frobq
