#include "frobq/qseries.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace frobq {

QSeries::QSeries(Rat prec) : prec_(std::move(prec)) {}

QSeries QSeries::one(Rat prec) { return monomial(1, 0, 1, std::move(prec)); }

QSeries QSeries::monomial(const Rat& c, long long e_num, long long e_den, Rat prec) {
  if (e_den <= 0) throw std::invalid_argument("QSeries::monomial: nonpositive denominator");
  QSeries r(std::move(prec));
  r.denom_ = e_den;
  if (c != 0) r.terms_.emplace(e_num, c);
  r.normalize();
  return r;
}

QSeries QSeries::from_terms(long long denom, const std::vector<std::pair<long long, Rat>>& terms,
                            Rat prec) {
  if (denom <= 0) throw std::invalid_argument("QSeries::from_terms: nonpositive denominator");
  QSeries r(std::move(prec));
  r.denom_ = denom;
  for (const auto& [e, c] : terms) r.terms_[e] += c;
  r.normalize();
  return r;
}

QSeries QSeries::raw(long long denom, TermMap terms, Rat prec) {
  if (denom <= 0) throw std::invalid_argument("QSeries::raw: nonpositive denominator");
  QSeries r(std::move(prec));
  r.denom_ = denom;
  r.terms_ = std::move(terms);
  const long long limit = term_limit(r.denom_, r.prec_);
  for (const auto& [e, c] : r.terms_) {
    if (c == 0) throw std::invalid_argument("QSeries::raw: zero coefficient stored");
    if (e > limit) throw std::invalid_argument("QSeries::raw: term at/above precision");
  }
  return r;
}

long long QSeries::term_limit(long long denom, const Rat& prec) {
  Rat pd = prec * make_int(denom);
  return rat_ceil(pd) - 1;  // e/denom < prec  <=>  e <= ceil(prec*denom)-1
}

void QSeries::normalize() {
  const long long limit = term_limit(denom_, prec_);
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || it->first > limit)
      it = terms_.erase(it);
    else
      ++it;
  }
  if (terms_.empty()) {
    denom_ = 1;
    return;
  }
  long long g = denom_;
  for (const auto& [e, c] : terms_) {
    g = llgcd(g, std::llabs(e));
    if (g == 1) return;
  }
  if (g > 1) {
    TermMap reduced;
    for (auto& [e, c] : terms_) reduced.emplace_hint(reduced.end(), e / g, std::move(c));
    terms_ = std::move(reduced);
    denom_ /= g;
  }
}

void QSeries::align(QSeries& a, QSeries& b) {
  if (a.denom_ == b.denom_) return;
  const long long l = lllcm(a.denom_, b.denom_);
  for (QSeries* s : {&a, &b}) {
    const long long f = l / s->denom_;
    if (f == 1) continue;
    TermMap scaled;
    for (auto& [e, c] : s->terms_) scaled.emplace_hint(scaled.end(), e * f, std::move(c));
    s->terms_ = std::move(scaled);
    s->denom_ = l;
  }
}

Rat QSeries::ord() const {
  if (terms_.empty()) return prec_;
  return make_rat(terms_.begin()->first, denom_);
}

Rat QSeries::coeff(long long e_num, long long e_den) const {
  if (e_den <= 0) throw std::invalid_argument("QSeries::coeff: nonpositive denominator");
  Rat e = make_rat(e_num, e_den);
  if (e >= prec_) throw std::out_of_range("QSeries::coeff: exponent at/above precision");
  // Bring e onto the stored grid; off-grid exponents hold exact zeros.
  Rat scaled = e * make_int(denom_);
  if (scaled.get_den() != 1) return 0;
  if (!scaled.get_num().fits_slong_p()) return 0;
  auto it = terms_.find(scaled.get_num().get_si());
  return it == terms_.end() ? Rat(0) : it->second;
}

QSeries QSeries::operator-() const {
  QSeries r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  QSeries b(o);
  align(*this, b);
  if (b.prec_ < prec_) prec_ = b.prec_;
  for (auto& [e, c] : b.terms_) terms_[e] += c;
  normalize();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries operator*(const QSeries& a0, const QSeries& b0) {
  QSeries a(a0), b(b0);
  QSeries::align(a, b);
  Rat p = a.prec_ < b.prec_ ? a.prec_ : b.prec_;
  {
    Rat da = a.ord() + b.prec_;  // error of b surfacing through a's lead
    Rat db = b.ord() + a.prec_;
    if (da < p) p = da;
    if (db < p) p = db;
  }
  QSeries r(p);
  r.denom_ = a.denom_;
  const long long limit = QSeries::term_limit(r.denom_, p);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const long long e = ea + eb;
      if (e > limit) break;  // b ascending: no later term fits either
      r.terms_[e] += ca * cb;
    }
  }
  r.normalize();
  return r;
}

QSeries& QSeries::operator*=(const QSeries& o) {
  *this = *this * o;
  return *this;
}

QSeries QSeries::scaled(const Rat& c) const {
  QSeries r(prec_);
  if (c == 0) return r;
  r.denom_ = denom_;
  r.terms_ = terms_;
  for (auto& [e, t] : r.terms_) t *= c;
  r.normalize();
  return r;
}

QSeries QSeries::mul_monomial(const Rat& c, long long s_num, long long s_den) const {
  if (s_den <= 0) throw std::invalid_argument("QSeries::mul_monomial: nonpositive denominator");
  Rat shift = make_rat(s_num, s_den);
  QSeries r(Rat(prec_ + shift));
  if (c == 0) return r;
  const long long l = lllcm(denom_, s_den);
  const long long f = l / denom_;
  const long long off = s_num * (l / s_den);
  r.denom_ = l;
  for (const auto& [e, t] : terms_) r.terms_.emplace_hint(r.terms_.end(), e * f + off, c * t);
  r.normalize();
  return r;
}

QSeries QSeries::inverse() const {
  if (terms_.empty())
    throw std::domain_error("QSeries::inverse: series is zero to stored precision");
  const long long alpha = terms_.begin()->first;
  const Rat& c0 = terms_.begin()->second;
  Rat pb = prec_ - 2 * make_rat(alpha, denom_);
  QSeries r(pb);
  // b exponents are (-alpha + m)/denom for m = 0..mmax.
  const long long mmax = term_limit(denom_, pb) + alpha;
  if (mmax < 0) return r;
  std::vector<std::pair<long long, const Rat*>> tail;
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    tail.emplace_back(it->first - alpha, &it->second);
  std::vector<Rat> b(static_cast<std::size_t>(mmax) + 1);
  b[0] = Rat(1) / c0;
  for (long long m = 1; m <= mmax; ++m) {
    Rat s = 0;
    for (const auto& [j, ca] : tail) {
      if (j > m) break;
      if (b[m - j] != 0) s += *ca * b[m - j];
    }
    if (s != 0) b[m] = -s / c0;
  }
  r.denom_ = denom_;
  for (long long m = 0; m <= mmax; ++m)
    if (b[m] != 0) r.terms_.emplace_hint(r.terms_.end(), -alpha + m, std::move(b[m]));
  r.normalize();
  return r;
}

QSeries QSeries::pow(long long e) const {
  if (e == 0) return one(prec_);
  if (e < 0) return inverse().pow(-e);
  QSeries base(*this), acc = one(prec_);
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

QSeries QSeries::substitute(long long t) const {
  if (t < 1) throw std::invalid_argument("QSeries::substitute: t must be >= 1");
  QSeries r(Rat(prec_ * make_int(t)));
  r.denom_ = denom_;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e * t, c);
  r.normalize();
  return r;
}

QSeries QSeries::truncated(Rat new_prec) const {
  if (new_prec > prec_)
    throw std::invalid_argument("QSeries::truncated: cannot raise precision");
  QSeries r(std::move(new_prec));
  r.denom_ = denom_;
  r.terms_ = terms_;
  r.normalize();
  return r;
}

QSeries::Diff QSeries::first_difference(const QSeries& a0, const QSeries& b0) {
  QSeries a(a0), b(b0);
  align(a, b);
  const Rat p = a.prec_ < b.prec_ ? a.prec_ : b.prec_;
  const long long limit = term_limit(a.denom_, p);
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    long long ea = ia == a.terms_.end() ? limit + 1 : ia->first;
    long long eb = ib == b.terms_.end() ? limit + 1 : ib->first;
    long long e = std::min(ea, eb);
    if (e > limit) break;
    Rat ca = ea == e ? ia->second : Rat(0);
    Rat cb = eb == e ? ib->second : Rat(0);
    if (ca != cb) return Diff{true, make_rat(e, a.denom_), ca, cb};
    if (ea == e) ++ia;
    if (eb == e) ++ib;
  }
  return Diff{};
}

bool operator==(const QSeries& a, const QSeries& b) {
  return !QSeries::first_difference(a, b).differs;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat ac = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Rat ex = make_rat(e, denom_);
    if (ex == 0) {
      os << rat_str(ac);
    } else {
      if (ac != 1) os << rat_str(ac) << "*";
      os << "q";
      if (ex != 1) {
        std::string es = rat_str(ex);
        os << "^" << (es.find('/') != std::string::npos || ex < 0 ? "(" + es + ")" : es);
      }
    }
  }
  if (first) os << "0";
  os << " + O(q^" << rat_str(prec_) << ")";
  return os.str();
}

}  // namespace frobq
