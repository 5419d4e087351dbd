#pragma once

#include <string>
#include <vector>

#include "frobq/qseries.hpp"

namespace frobq {

enum class CongruenceStatus { proved, conjectured, discovered };

std::string status_str(CongruenceStatus s);

// Claim: cpsi_{k, a2/2}(A n + B) == 0 (mod M) for all 0 <= A n + B <= n_max.
struct CongruenceClaim {
  int k = 4;
  long long a2 = 0;
  long long A = 1;   // progression modulus, B < A
  long long B = 0;   // progression residue
  long long M = 2;   // divisor, >= 2
  CongruenceStatus status = CongruenceStatus::discovered;
  long long n_max = 399;
  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) =
      default;
};

struct CongruenceCounterexample {
  long long index = 0;  // exponent A n + B whose coefficient is not divisible
  Rat coefficient;
};

// True iff M divides every coefficient of q^(An+B), 0 <= An+B <= n_max, of
// the given series; fills *out with the first counterexample when false.
// Throws std::invalid_argument on malformed claims or when the series
// precision does not cover n_max.
bool verify_claim(const CongruenceClaim& c, const QSeries& series,
                  CongruenceCounterexample* out = nullptr);

// Scans every progression A <= A_max, 0 <= B < A of cpsi_{k, a2/2} for
// divisibility through n_max, reporting per cell the maximal prime-power
// divisor M <= M_max for each prime involved. Claims matching the published
// table carry its status; everything else is marked discovered. Cells are
// independent; workers > 1 splits them across threads (output is identical).
std::vector<CongruenceClaim> scan_congruences(int k, long long a2,
                                              long long A_max, long long M_max,
                                              long long n_max, int workers = 1);

// 32 (q^2;q^2)^7 (q^4;q^4)^2 / ((q;q)^10 (q;q^2)^4): the odd-index subseries
// sum_n cpsi_{4,0}(2n+1) q^n in closed form.
QSeries series_4_0_odd(const Rat& prec);

// "k=4 a2=0 A=2 B=1 M=32 status=proved n_max=399"
std::string claim_line(const CongruenceClaim& c);

// Aligned columns, one row per claim; conjectured rows mark M with '*'.
std::string claim_table(const std::vector<CongruenceClaim>& claims);

}  // namespace frobq
