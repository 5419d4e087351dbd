#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frobq/qseries.hpp"
#include "frobq/zetaseries.hpp"

namespace frobq {

// One cell of a colored symbol: a nonnegative value with a color in 1..k.
struct ColoredEntry {
  long long value = 0;
  int color = 1;
  friend bool operator==(const ColoredEntry&, const ColoredEntry&) = default;
  friend auto operator<=>(const ColoredEntry&, const ColoredEntry&) = default;
};

using Row = std::vector<ColoredEntry>;

// Two-row symbol in k colors; each row is strictly decreasing in
// (value, color). Counted by cpsi_{k,a}(n) when |top| - |bottom| = a - k/2
// and the weight |top| + sum(values) equals n.
struct FrobPartition {
  Row top, bottom;
  friend bool operator==(const FrobPartition&, const FrobPartition&) = default;
};

// Variant symbol: two strictly decreasing rows plus a set of colors standing
// for implicit zero cells. Counted with |zero_colors| = k/2 - a + |top| -
// |bottom| and weight |top| + |bottom| + sum(values).
struct DrakeSymbol {
  Row top, bottom;
  std::vector<int> zero_colors;  // strictly decreasing
  friend bool operator==(const DrakeSymbol&, const DrakeSymbol&) = default;
};

long long fp_weight(const FrobPartition& f);
long long drake_weight(const DrakeSymbol& d);

bool row_valid(const Row& row, int k);
// a2 = 2a throughout; requires a2 == k (mod 2).
bool fp_valid(const FrobPartition& f, int k, long long a2);
bool drake_valid(const DrakeSymbol& d, int k, long long a2);

// Weight-preserving bijection between the two symbol families: bottom values
// shift by one and the zero-color set becomes explicit zero cells.
FrobPartition drake_to_plain(const DrakeSymbol& d);
DrakeSymbol plain_to_drake(const FrobPartition& f);

std::string fp_str(const FrobPartition& f);
std::string drake_str(const DrakeSymbol& d);

// Count all weight-n symbols (visiting each when a callback is given).
Int count_plain(int k, long long a2, long long n,
                const std::function<void(const FrobPartition&)>& visit = {});
Int count_drake(int k, long long a2, long long n,
                const std::function<void(const DrakeSymbol&)>& visit = {});

enum class EnumKind { plain, drake };

// Sum of count(n) q^n for n <= nmax (precision nmax + 1), by enumeration.
QSeries cpsi_enumerated(int k, long long a2, long long nmax,
                        EnumKind kind = EnumKind::plain);

// Exact generating functions via zeta-coefficient extraction from
//   prod_{n>=1} (1 + zeta q^n)^k  prod_{n>=0} (1 + zeta^-1 q^n)^k;
// CPsi_{k,a} is the zeta^(a - k/2) coefficient. The product is computed once
// per k inside a zeta window wide enough that every discarded slot is
// O(q^prec), then shared across residues.
class FrobProduct {
 public:
  FrobProduct(int k, Rat prec);

  int k() const { return k_; }
  const Rat& prec() const { return prec_; }
  long long window() const { return window_; }

  // CPsi_{k, a2/2}; requires a2 == k (mod 2).
  QSeries cpsi(long long a2) const;

 private:
  int k_;
  Rat prec_;
  long long window_ = 0;  // zeta exponents kept: |r| <= window_
  ZetaSeries f_;
};

QSeries cpsi_direct(int k, long long a2, Rat prec);
// CPhi_k = CPsi_{k, k/2}.
QSeries cphi_direct(int k, Rat prec);

}  // namespace frobq
