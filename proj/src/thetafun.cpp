#include "frobq/thetafun.hpp"

#include <sstream>
#include <stdexcept>

namespace frobq {

namespace {

// Extract a rational as a pair of long longs (all exponents in this module
// are tiny).
void rat_parts(const Rat& x, long long& num, long long& den) {
  if (!x.get_num().fits_slong_p() || !x.get_den().fits_slong_p())
    throw std::overflow_error("exponent does not fit in long long");
  num = x.get_num().get_si();
  den = x.get_den().get_si();
}

}  // namespace

ThetaIndex theta_canonical(ThetaIndex idx) {
  if (idx.m2 < 1) throw std::domain_error("theta_canonical: m2 must be >= 1");
  long long period = 2 * idx.m2;
  long long b = idx.b2 % period;
  if (b < 0) b += period;
  if (b > idx.m2) b = period - b;
  return ThetaIndex{idx.m2, b};
}

std::string theta_name(const ThetaIndex& idx) {
  std::ostringstream os;
  os << "theta[";
  if (idx.m2 % 2 == 0)
    os << idx.m2 / 2;
  else
    os << idx.m2 << "/2";
  os << ",";
  if (idx.b2 % 2 == 0)
    os << idx.b2 / 2;
  else
    os << idx.b2 << "/2";
  os << "]";
  return os.str();
}

QSeries pochhammer(long long a_num, long long a_den, long long step, Rat prec) {
  if (a_num < 1 || a_den < 1 || step < 1)
    throw std::domain_error("pochhammer: requires a_num >= 1, a_den >= 1, step >= 1");
  QSeries acc = QSeries::one(prec);
  Rat e = make_rat(a_num, a_den);
  while (e < prec) {
    long long en, ed;
    rat_parts(e, en, ed);
    acc -= acc.mul_monomial(Rat(1), en, ed);
    e += make_int(step);
  }
  return acc;
}

QSeries pochhammer_neg(long long a_num, long long a_den, long long step, Rat prec) {
  if (a_num < 0 || a_den < 1 || step < 1)
    throw std::domain_error("pochhammer_neg: requires a_num >= 0, a_den >= 1, step >= 1");
  QSeries acc = QSeries::one(prec);
  Rat e = make_rat(a_num, a_den);
  while (e < prec) {
    if (e == 0) {
      acc = acc.scaled(Rat(2));
    } else {
      long long en, ed;
      rat_parts(e, en, ed);
      acc += acc.mul_monomial(Rat(1), en, ed);
    }
    e += make_int(step);
  }
  return acc;
}

QSeries eta_series(Rat prec) {
  Rat inner = prec - make_rat(1, 24);
  return pochhammer(1, 1, 1, inner).mul_monomial(Rat(1), 1, 24);
}

QSeries theta_const(ThetaIndex idx, Rat prec) {
  idx = theta_canonical(idx);
  long long denom = 8 * idx.m2;
  Rat limit = prec * make_int(denom);  // keep r2^2 < limit
  std::vector<std::pair<long long, Rat>> terms;
  for (long long r2 = idx.b2;; r2 += 2 * idx.m2) {
    Rat sq = make_rat(r2);
    sq *= make_int(r2);
    if (sq >= limit) break;
    terms.emplace_back(r2 * r2, Rat(1));
  }
  for (long long r2 = idx.b2 - 2 * idx.m2;; r2 -= 2 * idx.m2) {
    Rat sq = make_rat(r2);
    sq *= make_int(r2);
    if (sq >= limit) break;
    terms.emplace_back(r2 * r2, Rat(1));
  }
  return QSeries::from_terms(denom, terms, prec);
}

ZetaSeries theta_two_var(ThetaIndex idx, Rat qprec) {
  if (idx.m2 < 1) throw std::domain_error("theta_two_var: m2 must be >= 1");
  ZetaSeries z(qprec);
  long long denom = 8 * idx.m2;
  Rat limit = qprec * make_int(denom);
  for (long long r2 = idx.b2;; r2 += 2 * idx.m2) {
    Rat sq = make_rat(r2);
    sq *= make_int(r2);
    if (sq >= limit) break;
    z.add_term(r2, QSeries::monomial(Rat(1), r2 * r2, denom, qprec));
  }
  for (long long r2 = idx.b2 - 2 * idx.m2;; r2 -= 2 * idx.m2) {
    Rat sq = make_rat(r2);
    sq *= make_int(r2);
    if (sq >= limit) break;
    z.add_term(r2, QSeries::monomial(Rat(1), r2 * r2, denom, qprec));
  }
  return z;
}

ZetaSeries jacobi_theta_shifted(Rat qprec) {
  return theta_two_var(ThetaIndex{1, 1}, qprec);
}

QSeries klein_form(long long a_num, long long a_den, Rat prec) {
  Rat a = make_rat(a_num, a_den);
  if (a <= 0 || a >= 1)
    throw std::domain_error("klein_form: requires 0 < a < 1");
  Rat s = a * a / 2 - a / 2 + make_rat(1, 12);
  Rat inner = prec - s;
  long long cn, cd;
  rat_parts(a, cn, cd);
  QSeries p1 = pochhammer(cn, cd, 1, inner);
  QSeries p2 = pochhammer(cd - cn, cd, 1, inner);
  QSeries den = pochhammer(1, 1, 1, inner);
  QSeries body = p1 * p2 * den.inverse().pow(2);
  long long sn, sd;
  rat_parts(s, sn, sd);
  return body.mul_monomial(Rat(-1), sn, sd);
}

QSeries theta_product_form(ThetaIndex idx, Rat prec) {
  idx = theta_canonical(idx);
  Rat pre = make_rat(idx.b2 * idx.b2, 8 * idx.m2);
  Rat inner = prec - pre;
  QSeries body = pochhammer(idx.m2, 1, idx.m2, inner);
  body = body * pochhammer_neg(idx.m2 - idx.b2, 2, idx.m2, inner);
  body = body * pochhammer_neg(idx.m2 + idx.b2, 2, idx.m2, inner);
  long long pn, pd;
  rat_parts(pre, pn, pd);
  return body.mul_monomial(Rat(1), pn, pd);
}

QSeries theta_eta_klein_form(ThetaIndex idx, Rat prec) {
  idx = theta_canonical(idx);
  // Work with enough headroom to absorb the Klein prefactor orders (all
  // bounded by m2/8 in absolute value) plus the final monomial shifts.
  Rat target = prec + make_rat(idx.m2);
  QSeries etapart = pochhammer(2 * idx.m2, 1, 2 * idx.m2, target).pow(2) *
                    pochhammer(idx.m2, 1, idx.m2, target).inverse();
  if (idx.b2 == idx.m2) {
    // Klein index degenerates to 1; the limit of the quotient form is 2, so
    // theta_{m,m} = 2 q^(m/4) (q^4m;q^4m)^2 / (q^2m;q^2m).
    return etapart.mul_monomial(Rat(2), idx.m2, 8).truncated(prec);
  }
  // alpha = 1/2 + b/(2m) = (m2 + b2) / (2*m2), so 1/2 <= alpha < 1.
  Rat phi = target / make_int(2 * idx.m2) + 1;
  Rat plo = target / make_int(idx.m2) + 1;
  QSeries thi =
      klein_form(idx.m2 + idx.b2, 2 * idx.m2, phi).substitute(2 * idx.m2);
  QSeries tlo =
      klein_form(idx.m2 + idx.b2, 2 * idx.m2, plo).substitute(idx.m2);
  QSeries body = etapart * thi * tlo.inverse();
  return body.mul_monomial(Rat(1), idx.m2, 24).truncated(prec);
}

}  // namespace frobq
