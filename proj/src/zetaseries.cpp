#include "frobq/zetaseries.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>

namespace frobq {

ZetaSeries::ZetaSeries(Rat qprec) : qprec_(std::move(qprec)) {}

ZetaSeries ZetaSeries::one(Rat qprec) {
  ZetaSeries z(qprec);
  z.set_slot(0, QSeries::one(std::move(qprec)));
  return z;
}

int ZetaSeries::zdenom() const {
  for (const auto& [r2, s] : slots_)
    if (r2 % 2 != 0) return 2;
  return 1;
}

QSeries ZetaSeries::coeff(long long r2) const {
  auto it = slots_.find(r2);
  return it == slots_.end() ? QSeries::zero(qprec_) : it->second;
}

void ZetaSeries::set_slot(long long r2, QSeries s) {
  QSeries t = s.prec() > qprec_ ? s.truncated(qprec_) : std::move(s);
  if (t.prec() < qprec_)
    throw std::invalid_argument("ZetaSeries::set_slot: slot precision below series qprec");
  if (t.is_zero())
    slots_.erase(r2);
  else
    slots_.insert_or_assign(r2, std::move(t));
}

void ZetaSeries::add_term(long long r2, const QSeries& s) {
  auto it = slots_.find(r2);
  if (it == slots_.end()) {
    set_slot(r2, s);
    return;
  }
  QSeries sum = it->second + s;
  if (sum.prec() < qprec_) qprec_ = sum.prec();
  set_slot(r2, std::move(sum));
}

void ZetaSeries::drop_empty() {
  for (auto it = slots_.begin(); it != slots_.end();)
    it = it->second.is_zero() ? slots_.erase(it) : std::next(it);
}

ZetaSeries ZetaSeries::operator-() const {
  ZetaSeries r(qprec_);
  for (const auto& [r2, s] : slots_) r.slots_.emplace_hint(r.slots_.end(), r2, -s);
  return r;
}

ZetaSeries operator+(ZetaSeries a, const ZetaSeries& b) {
  if (b.qprec_ < a.qprec_) a.qprec_ = b.qprec_;
  for (const auto& [r2, s] : b.slots_) {
    auto it = a.slots_.find(r2);
    if (it == a.slots_.end())
      a.slots_.emplace(r2, s);
    else
      it->second += s;
  }
  // Re-truncate everything to the common precision.
  ZetaSeries r(a.qprec_);
  for (auto& [r2, s] : a.slots_) r.set_slot(r2, std::move(s));
  return r;
}

ZetaSeries operator-(ZetaSeries a, const ZetaSeries& b) { return std::move(a) + (-b); }

ZetaSeries operator*(const ZetaSeries& a, const ZetaSeries& b) {
  Rat p = a.qprec_ < b.qprec_ ? a.qprec_ : b.qprec_;
  ZetaSeries r(p);
  std::map<long long, QSeries> acc;
  for (const auto& [ra, sa] : a.slots_) {
    const Rat oa = sa.ord();
    for (const auto& [rb, sb] : b.slots_) {
      Rat lead = oa + sb.ord();
      if (lead >= p) continue;  // product cannot reach below the truncation
      QSeries prod = sa * sb;
      auto it = acc.find(ra + rb);
      if (it == acc.end())
        acc.emplace(ra + rb, std::move(prod));
      else
        it->second += prod;
    }
  }
  for (auto& [r2, s] : acc) {
    if (s.prec() < r.qprec_) r.qprec_ = s.prec();
  }
  for (auto& [r2, s] : acc) r.set_slot(r2, std::move(s));
  return r;
}

ZetaSeries ZetaSeries::scaled_q(const QSeries& f) const {
  ZetaSeries r(qprec_);
  for (const auto& [r2, s] : slots_) {
    QSeries prod = s * f;
    if (prod.prec() < r.qprec_) r.qprec_ = prod.prec();
    r.slots_.emplace(r2, std::move(prod));
  }
  ZetaSeries out(r.qprec_);
  for (auto& [r2, s] : r.slots_) out.set_slot(r2, std::move(s));
  return out;
}

ZetaSeries ZetaSeries::shifted_zeta(long long r2) const {
  ZetaSeries r(qprec_);
  for (const auto& [k, s] : slots_) r.slots_.emplace_hint(r.slots_.end(), k + r2, s);
  return r;
}

ZetaSeries ZetaSeries::pow(long long e) const {
  if (e < 0) throw std::invalid_argument("ZetaSeries::pow: negative exponent");
  ZetaSeries acc = one(qprec_), base(*this);
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

ZetaSeries ZetaSeries::pruned(const std::function<bool(long long)>& keep) const {
  ZetaSeries r(qprec_);
  for (const auto& [r2, s] : slots_)
    if (keep(r2)) r.slots_.emplace_hint(r.slots_.end(), r2, s);
  return r;
}

ZetaSeries::Diff ZetaSeries::first_difference(const ZetaSeries& a, const ZetaSeries& b) {
  const Rat p = a.qprec_ < b.qprec_ ? a.qprec_ : b.qprec_;
  auto ia = a.slots_.begin();
  auto ib = b.slots_.begin();
  const QSeries zero = QSeries::zero(p);
  while (ia != a.slots_.end() || ib != b.slots_.end()) {
    long long ka = ia == a.slots_.end() ? LLONG_MAX : ia->first;
    long long kb = ib == b.slots_.end() ? LLONG_MAX : ib->first;
    long long k = std::min(ka, kb);
    const QSeries& sa = ka == k ? ia->second : zero;
    const QSeries& sb = kb == k ? ib->second : zero;
    QSeries::Diff d = QSeries::first_difference(sa.prec() > p ? sa.truncated(p) : sa,
                                                sb.prec() > p ? sb.truncated(p) : sb);
    if (d.differs) return Diff{true, k, d};
    if (ka == k) ++ia;
    if (kb == k) ++ib;
  }
  return Diff{};
}

bool operator==(const ZetaSeries& a, const ZetaSeries& b) {
  return !ZetaSeries::first_difference(a, b).differs;
}

std::string ZetaSeries::str() const {
  std::ostringstream os;
  os << "ZetaSeries(qprec=" << rat_str(qprec_) << ")";
  for (const auto& [r2, s] : slots_) {
    os << "\n  z^";
    if (r2 % 2 == 0)
      os << (r2 / 2);
    else
      os << "(" << r2 << "/2)";
    os << ": " << s.str();
  }
  return os.str();
}

}  // namespace frobq
