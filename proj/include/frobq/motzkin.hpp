#pragma once

#include <string>
#include <vector>

#include "frobq/frobgen.hpp"
#include "frobq/qseries.hpp"

namespace frobq {

// One step of a colored path: horizontal advance 1, vertical rise, and an
// attached color set (strictly increasing, values in 1..k).
struct MotzkinStep {
  long long rise = 0;
  std::vector<int> colors;
  friend bool operator==(const MotzkinStep&, const MotzkinStep&) = default;
};

// a-shifted colored lattice path (a = a2/2, a2 == k mod 2): steps (1, j) with
// j in [a - k/2, a + k/2], every step carrying k/2 - a + j colors, partial
// heights never negative, and a length-n path ending at height a(n-1).
struct MotzkinPath {
  int k = 1;
  long long a2 = 1;
  std::vector<MotzkinStep> steps;
  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
};

bool path_valid(const MotzkinPath& p);

// "(rise;{c1,c2,...}) (rise;{}) ..." step sequence.
std::string path_str(const MotzkinPath& p);

// Area deficit b_M = (k/2)n(n+1) + a n(2n+1) - a_M for a valid path of odd
// length 2n+1 (a_M = area between the path and the x-axis). Throws
// std::invalid_argument for invalid or even-length paths.
long long path_deficit(const MotzkinPath& p);

// Same path with a (1, a+k/2) step prepended and a (1, a-k/2) step appended:
// a valid path of length +2 with the same deficit.
MotzkinPath extend_path(const MotzkinPath& p);

// All colored paths of the given length, deterministic order; len <= 6.
std::vector<MotzkinPath> enumerate_paths(int k, long long a2, int len);

// Reversed area generating polynomial
//   CM_{k,a}^{2n+1}(q) = q^((k/2)n(n+1) + a n(2n+1)) CM~_{k,a}^{2n+1}(1/q)
//                      = sum over length-(2n+1) paths w of q^(b_M(w)),
// truncated at q^prec. Deficit DP over (height, deficit) states with
// binomial(k, k/2 - a + rise) color weights per step.
QSeries cm_poly(int k, long long a2, long long n, const Rat& prec);

// Weight-preserving bijection: the length-(2n+1) path whose first n steps
// encode the top-row value counts, middle step the zero-color set, and last n
// steps the bottom-row value counts; b_M(path) = weight(d). Requires a valid
// symbol and n > 2 max(a1+1, b1+1).
MotzkinPath partition_to_path(const DrakeSymbol& d, int k, long long a2,
                              long long n);

struct ConvergenceReport {
  long long n = 0;
  long long depth = 0;       // largest exponent compared
  long long guaranteed = 0;  // ceil(n/2) - 2, may be negative
  long long agreement = 0;   // largest e with all coefficients <= e equal (-1: none)
  bool ok = false;           // agreement covers min(guaranteed, depth)
};

// Compares cm_poly(k, a2, n) against the generating function coefficientwise
// through q^depth.
ConvergenceReport convergence_check(int k, long long a2, long long n,
                                    long long depth);

}  // namespace frobq
