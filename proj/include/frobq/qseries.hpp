#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frobq/rational.hpp"

namespace frobq {

// Exact truncated Laurent series in q^(1/denom) with rational coefficients,
// "known modulo q^prec".
//
// Invariants: denom >= 1; each stored term c * q^(e/denom) has c != 0 and
// e/denom < prec; absent exponents below prec are exact zeros. The stored
// denominator is kept minimal for the current term support (it need not match
// the denominator the series was built with).
class QSeries {
 public:
  using TermMap = std::map<long long, Rat>;

  explicit QSeries(Rat prec);  // zero series

  static QSeries zero(Rat prec) { return QSeries(std::move(prec)); }
  static QSeries one(Rat prec);
  // c * q^(e_num/e_den) truncated at prec.
  static QSeries monomial(const Rat& c, long long e_num, long long e_den, Rat prec);
  // Terms given as (exponent numerator, coefficient) over a common denominator;
  // duplicate exponents accumulate.
  static QSeries from_terms(long long denom, const std::vector<std::pair<long long, Rat>>& terms,
                            Rat prec);

  const Rat& prec() const { return prec_; }
  long long denom() const { return denom_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Lowest stored exponent; prec() if no terms are stored.
  Rat ord() const;

  // Coefficient of q^(e_num/e_den). Throws std::out_of_range at/above prec;
  // exponents off the stored grid are exact zeros.
  Rat coeff(long long e_num, long long e_den = 1) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

  // Cauchy product at min(prec_a, prec_b), degraded further when a negative
  // leading exponent lets the other factor's error term surface earlier.
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator*=(const QSeries& o);

  QSeries scaled(const Rat& c) const;
  // Multiplication by the exact monomial c * q^(s_num/s_den); the precision
  // rises/falls by the shift (the monomial carries no truncation error).
  QSeries mul_monomial(const Rat& c, long long s_num, long long s_den = 1) const;

  // Multiplicative inverse; throws std::domain_error when no term is stored.
  // Result precision is prec - 2*ord.
  QSeries inverse() const;

  // Integer power; e == 0 yields 1 at this precision, e < 0 inverts first.
  QSeries pow(long long e) const;

  // q -> q^t for integer t >= 1; exponents and precision scale by t.
  QSeries substitute(long long t) const;

  // Copy truncated to new_prec <= prec (larger values are an error).
  QSeries truncated(Rat new_prec) const;

  // Equal iff the term maps coincide below min(prec_a, prec_b) after
  // rescaling to a common denominator.
  friend bool operator==(const QSeries& a, const QSeries& b);
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  struct Diff {
    bool differs = false;
    Rat exponent, lhs, rhs;
  };
  // First exponent below min prec where the series disagree.
  static Diff first_difference(const QSeries& a, const QSeries& b);

  std::string str() const;

  // Internal/raw construction used by deserialization: takes the stored
  // representation verbatim after validating invariants.
  static QSeries raw(long long denom, TermMap terms, Rat prec);

 private:
  long long denom_ = 1;
  Rat prec_;
  TermMap terms_;

  void normalize();
  static void align(QSeries& a, QSeries& b);
  // Largest exponent numerator strictly below prec on the denom grid.
  static long long term_limit(long long denom, const Rat& prec);
};

}  // namespace frobq
