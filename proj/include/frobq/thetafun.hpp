#pragma once

#include "frobq/qseries.hpp"
#include "frobq/zetaseries.hpp"

namespace frobq {

// Index of a theta function theta_{m,b} / vartheta_{m,b} with m = m2/2 and
// b = b2/2 (both stored doubled so half-integer indices stay integral).
struct ThetaIndex {
  long long m2 = 2;
  long long b2 = 0;

  friend bool operator==(const ThetaIndex& a, const ThetaIndex& b) {
    return a.m2 == b.m2 && a.b2 == b.b2;
  }
  friend auto operator<=>(const ThetaIndex& a, const ThetaIndex& b) {
    if (a.m2 != b.m2) return a.m2 <=> b.m2;
    return a.b2 <=> b.b2;
  }
};

// Canonical representative under theta_{m, 2mk +- b} = theta_{m,b}: reduces b2
// modulo 2*m2 and folds so that 0 <= b2 <= m2.
ThetaIndex theta_canonical(ThetaIndex idx);

// Human-readable "theta[m,b]" with rational halves rendered as fractions.
std::string theta_name(const ThetaIndex& idx);

// (q^(a_num/a_den); q^step)_infinity. Requires a_num >= 1, a_den >= 1, step >= 1.
QSeries pochhammer(long long a_num, long long a_den, long long step, Rat prec);

// (-q^(a_num/a_den); q^step)_infinity (negative-base Pochhammer); requires
// a_num >= 0. A zero base means (-1; q^step) = 2*(-q^step; q^step).
QSeries pochhammer_neg(long long a_num, long long a_den, long long step, Rat prec);

// Dedekind eta: q^(1/24) * (q;q)_infinity.
QSeries eta_series(Rat prec);

// Theta constant theta_{m,b}(tau) = sum over r = b + 2mn of q^(r^2/4m).
QSeries theta_const(ThetaIndex idx, Rat prec);

// Two-variable vartheta_{m,b}(z;tau) = sum over r = b + 2mn of q^(r^2/4m) zeta^r.
ZetaSeries theta_two_var(ThetaIndex idx, Rat qprec);

// -vartheta(z + 1/2; tau) = vartheta_{1/2,1/2}(z;tau)
//   = sum over n of q^((n+1/2)^2/2) zeta^(n+1/2).
ZetaSeries jacobi_theta_shifted(Rat qprec);

// Klein form t_{a,0}(tau) for 0 < a < 1 (a = a_num/a_den):
//   -q^(a^2/2 - a/2 + 1/12) (q^a;q)_inf (q^(1-a);q)_inf / (q;q)_inf^2.
QSeries klein_form(long long a_num, long long a_den, Rat prec);

// Product side of the theta_{m,b} triple-product identity:
//   q^(b^2/4m) (q^2m;q^2m)_inf (-q^(m-b);q^2m)_inf (-q^(m+b);q^2m)_inf,
// for canonical 0 <= b2 <= m2.
QSeries theta_product_form(ThetaIndex idx, Rat prec);

// Eta/Klein-form evaluation of theta_{m,b} (index canonicalized first):
//   theta_{m,b} = q^(m/12) * (q^4m;q^4m)^2/(q^2m;q^2m)
//                          * t_{1/2+b/2m,0}(4m tau) / t_{1/2+b/2m,0}(2m tau)
// for 0 <= b < m, and at the boundary residue
//   theta_{m,m} = 2 q^(m/4) (q^4m;q^4m)^2 / (q^2m;q^2m).
QSeries theta_eta_klein_form(ThetaIndex idx, Rat prec);

}  // namespace frobq
