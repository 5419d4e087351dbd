#pragma once

#include <functional>
#include <map>

#include "frobq/qseries.hpp"

namespace frobq {

// Finite two-variable series: sum over zeta-exponents r of QSeries
// coefficients in q. Exponents r may be half-integers and are stored doubled
// (key r2 = 2r); every slot shares one q-precision and empty slots are
// dropped.
class ZetaSeries {
 public:
  explicit ZetaSeries(Rat qprec);

  static ZetaSeries zero(Rat qprec) { return ZetaSeries(std::move(qprec)); }
  static ZetaSeries one(Rat qprec);

  const Rat& qprec() const { return qprec_; }
  const std::map<long long, QSeries>& slots() const { return slots_; }
  bool is_zero() const { return slots_.empty(); }

  // 1 if every stored zeta-exponent is integral, else 2.
  int zdenom() const;

  // q-coefficient series of zeta^(r2/2); zero series at qprec when absent.
  QSeries coeff(long long r2) const;

  void set_slot(long long r2, QSeries s);
  void add_term(long long r2, const QSeries& s);

  ZetaSeries operator-() const;
  friend ZetaSeries operator+(ZetaSeries a, const ZetaSeries& b);
  friend ZetaSeries operator-(ZetaSeries a, const ZetaSeries& b);
  // Zeta-convolution; per-slot q-products truncate at min qprec, and slot
  // pairs whose combined leading order is out of range are skipped.
  friend ZetaSeries operator*(const ZetaSeries& a, const ZetaSeries& b);

  // Multiply every slot by f (zeta-degree zero).
  ZetaSeries scaled_q(const QSeries& f) const;

  // Shift all zeta-exponents by r2/2.
  ZetaSeries shifted_zeta(long long r2) const;

  ZetaSeries pow(long long e) const;  // e >= 0

  // Keep only slots with keep(r2) true.
  ZetaSeries pruned(const std::function<bool(long long)>& keep) const;

  friend bool operator==(const ZetaSeries& a, const ZetaSeries& b);
  friend bool operator!=(const ZetaSeries& a, const ZetaSeries& b) { return !(a == b); }

  struct Diff {
    bool differs = false;
    long long r2 = 0;
    QSeries::Diff qdiff;
  };
  static Diff first_difference(const ZetaSeries& a, const ZetaSeries& b);

  std::string str() const;

 private:
  Rat qprec_;
  std::map<long long, QSeries> slots_;

  void drop_empty();
};

}  // namespace frobq
