#include "frobq/decomp.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frobq {

namespace {

long long mod2k(long long c2, long long k) {
  long long n = 2 * k;
  return ((c2 % n) + n) % n;
}

// h_{1,j}: theta_{1,1} for even j, theta_{1,0} for odd j (period 2).
ThetaIndex h1_index(long long j) {
  return ThetaIndex{2, ((j % 2) + 2) % 2 == 0 ? 2 : 0};
}

std::string mono_str(const ThetaMonomial& mono, bool latex) {
  std::string out;
  for (size_t i = 0; i < mono.size();) {
    size_t j = i;
    while (j < mono.size() && mono[j] == mono[i]) ++j;
    long long e = static_cast<long long>(j - i);
    if (!out.empty() && !latex) out += ' ';
    if (latex) {
      out += "\\theta_{" + half_str(mono[i].m2) + "," + half_str(mono[i].b2) + "}";
      if (e != 1) out += "^{" + std::to_string(e) + "}";
    } else {
      out += theta_name(mono[i]);
      if (e != 1) out += "^" + std::to_string(e);
    }
    i = j;
  }
  return out;
}

std::string expr_str(const std::map<ThetaMonomial, Int>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    Int a = c < 0 ? Int(-c) : c;
    std::string body = mono_str(mono, latex);
    std::string piece;
    if (a != 1 || body.empty()) {
      piece = a.get_str();
      if (!body.empty()) piece += latex ? "" : " ";
    }
    piece += body;
    if (first) {
      out = (c < 0 ? "-" : "") + piece;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace

std::string half_str(long long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

const QSeries& ThetaCache::get(ThetaIndex idx) {
  idx = theta_canonical(idx);
  auto it = memo_.find(idx);
  if (it == memo_.end())
    it = memo_.emplace(idx, theta_const(idx, prec_)).first;
  return it->second;
}

ThetaExpr ThetaExpr::one() {
  ThetaExpr e;
  e.add_term({}, 1);
  return e;
}

ThetaExpr ThetaExpr::theta(ThetaIndex idx) {
  ThetaExpr e;
  e.add_term({idx}, 1);
  return e;
}

void ThetaExpr::add_term(ThetaMonomial mono, const Int& coeff) {
  if (coeff == 0) return;
  for (ThetaIndex& idx : mono) idx = theta_canonical(idx);
  std::sort(mono.begin(), mono.end());
  auto it = terms_.try_emplace(std::move(mono), 0).first;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

ThetaExpr& ThetaExpr::operator+=(const ThetaExpr& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

ThetaExpr operator*(const ThetaExpr& a, const ThetaExpr& b) {
  ThetaExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      ThetaMonomial mono = ma;
      mono.insert(mono.end(), mb.begin(), mb.end());
      Int c = ca * cb;
      out.add_term(std::move(mono), c);
    }
  return out;
}

ThetaExpr ThetaExpr::scaled(const Int& c) const {
  ThetaExpr out;
  for (const auto& [mono, v] : terms_) {
    Int cv = v * c;
    out.add_term(mono, cv);
  }
  return out;
}

QSeries ThetaExpr::eval(ThetaCache& cache) const {
  QSeries acc = QSeries::zero(cache.prec());
  for (const auto& [mono, c] : terms_) {
    QSeries prod = QSeries::one(cache.prec());
    for (const ThetaIndex& idx : mono) prod *= cache.get(idx);
    acc += prod.scaled(Rat(c));
  }
  return acc;
}

std::string ThetaExpr::str() const { return expr_str(terms_, false); }
std::string ThetaExpr::latex() const { return expr_str(terms_, true); }

const ThetaExpr& HVector::entry(long long c2) const {
  if (k < 1) throw std::invalid_argument("HVector::entry: empty vector");
  return entries.at(mod2k(c2, k));
}

bool HVector::symmetric() const {
  for (const auto& [c2, e] : entries)
    if (!(entry(2 * k - c2) == e)) return false;
  return true;
}

HVector h_one() {
  HVector h;
  h.k = 1;
  h.entries[1] = ThetaExpr::one();
  return h;
}

HVector h_base() {
  HVector h;
  h.k = 2;
  h.entries[0] = ThetaExpr::theta({2, 2});
  h.entries[2] = ThetaExpr::theta({2, 0});
  return h;
}

HVector h_step_full(const HVector& h) {
  if (h.k < 2 || h.k % 2 != 0)
    throw std::invalid_argument("h_step_full: input level must be even");
  long long ell = h.k / 2;
  long long m2 = 2 * ell * (ell + 1);
  HVector out;
  out.k = h.k + 2;
  for (long long b = 0; b <= ell + 1; ++b) {
    ThetaExpr acc;
    for (long long c = 0; c < 2 * ell; ++c) {
      ThetaExpr part =
          ThetaExpr::theta(h1_index(b - c)) *
          (ThetaExpr::theta({m2, 2 * (b * ell - c * (ell + 1))}) * h.entry(2 * c));
      acc += part;
    }
    out.entries[2 * b] = acc;
  }
  for (long long b = ell + 2; b <= 2 * ell + 1; ++b)
    out.entries[2 * b] = out.entries.at(2 * (2 * (ell + 1) - b));
  return out;
}

HVector h_step_half(const HVector& h) {
  if (h.k < 2 || h.k % 2 != 0)
    throw std::invalid_argument("h_step_half: input level must be even");
  long long ell = h.k / 2;
  long long m2 = 2 * ell * (2 * ell + 1);
  HVector out;
  out.k = h.k + 1;
  for (long long b = 0; b <= 2 * ell; ++b) {
    ThetaExpr acc;
    for (long long c = 0; c < 2 * ell; ++c) {
      ThetaExpr part =
          ThetaExpr::theta({m2, 2 * (c * (2 * ell + 1) - ell * (2 * b + 1))}) *
          h.entry(2 * c);
      acc += part;
    }
    out.entries[2 * b + 1] = acc;
  }
  return out;
}

HVector h_step_half_to_full(const HVector& h) {
  if (h.k < 1 || h.k % 2 != 1)
    throw std::invalid_argument("h_step_half_to_full: input level must be odd");
  long long ell = (h.k - 1) / 2;
  long long m2 = 2 * (2 * ell + 1) * (ell + 1);
  HVector out;
  out.k = h.k + 1;
  for (long long b = 0; b <= 2 * ell + 1; ++b) {
    ThetaExpr acc;
    for (long long c = 0; c <= 2 * ell; ++c) {
      ThetaExpr part =
          ThetaExpr::theta({m2, 2 * ((2 * c + 1) * (ell + 1) - (2 * ell + 1) * b)}) *
          h.entry(2 * c + 1);
      acc += part;
    }
    out.entries[2 * b] = acc;
  }
  return out;
}

HVector h_vector(long long k) {
  if (k < 1) throw std::invalid_argument("h_vector: k must be positive");
  if (k == 1) return h_one();
  HVector h = h_base();
  while (h.k + 2 <= k) h = h_step_full(h);
  if (h.k < k) h = h_step_half(h);
  return h;
}

ZetaSeries reconstruct(long long k, Rat prec) {
  HVector h = h_vector(k);
  ThetaCache cache(prec);
  ZetaSeries out(prec);
  for (const auto& [c2, e] : h.entries) {
    ZetaSeries part =
        theta_two_var({k, c2}, prec).scaled_q(e.eval(cache));
    out = out + part;
  }
  return out;
}

QSeries cpsi_from_h(long long k, long long a2, const Rat& prec) {
  if (k < 1) throw std::invalid_argument("cpsi_from_h: k must be positive");
  if (a2 < 0 || (a2 - k) % 2 != 0)
    throw std::invalid_argument("cpsi_from_h: need a2 >= 0 with a2 == k mod 2");
  HVector h = h_vector(k);
  Rat inner = prec + make_rat(k, 6) + 1;
  ThetaCache cache(inner);
  QSeries num = h.entry(a2).eval(cache);
  QSeries den = pochhammer(1, 1, 1, inner).pow(k);
  QSeries res = (num * den.inverse()).mul_monomial(Rat(1), a2 * a2 - k * k, 8 * k);
  return res.truncated(prec);
}

namespace {

struct RewriteRule {
  ThetaMonomial from_a, from_b;
  std::vector<std::pair<ThetaMonomial, int>> to;
};

const std::vector<RewriteRule>& rewrite_rules() {
  static const std::vector<RewriteRule> r = {
      // theta_{2,2}theta_{6,0} + theta_{2,0}theta_{6,6} = 2 theta_{2,1}theta_{6,3}
      {{{4, 4}, {12, 0}}, {{4, 0}, {12, 12}}, {{{{4, 2}, {12, 6}}, 2}}},
      // theta_{2,2}theta_{6,4} + theta_{2,0}theta_{6,2}
      //     = theta_{2,1}theta_{6,1} + theta_{2,1}theta_{6,5}
      {{{4, 4}, {12, 8}},
       {{4, 0}, {12, 4}},
       {{{{4, 2}, {12, 2}}, 1}, {{{4, 2}, {12, 10}}, 1}}},
  };
  return r;
}

// Removes pat from mono as a multiset; mono is left mutated on failure, so
// callers must pass a discardable copy.
bool remove_pattern(ThetaMonomial& mono, const ThetaMonomial& pat) {
  for (const ThetaIndex& p : pat) {
    auto it = std::find(mono.begin(), mono.end(), p);
    if (it == mono.end()) return false;
    mono.erase(it);
  }
  return true;
}

ThetaMonomial with_pattern(ThetaMonomial base, const ThetaMonomial& pat) {
  base.insert(base.end(), pat.begin(), pat.end());
  std::sort(base.begin(), base.end());
  return base;
}

}  // namespace

ThetaExpr sym_simplify(ThetaExpr e) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const RewriteRule& rule : rewrite_rules()) {
      for (const auto& [mono, c1] : e.terms()) {
        ThetaMonomial base = mono;
        if (!remove_pattern(base, rule.from_a)) continue;
        ThetaMonomial partner = with_pattern(base, rule.from_b);
        auto it = e.terms().find(partner);
        if (it == e.terms().end()) continue;
        const Int& c2 = it->second;
        if ((c1 > 0) != (c2 > 0)) continue;
        Int t = c1 > 0 ? std::min(c1, c2) : std::max(c1, c2);
        ThetaExpr delta;
        Int neg = -t;
        delta.add_term(mono, neg);
        delta.add_term(partner, neg);
        for (const auto& [pat, mult] : rule.to) {
          Int tm = t * mult;
          delta.add_term(with_pattern(base, pat), tm);
        }
        e += delta;
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return e;
}

namespace {

// One rendered term: integer coefficient, explicit q-power, and exponent maps
// for Pochhammer symbols (q^x;q^s), eta(N) = eta(N tau), and Klein forms
// t(a_num/a_den; N) = t_{a,0}(N tau).
struct ProductForm {
  Int coeff = 1;
  Rat qpow = Rat(0);
  std::map<std::pair<long long, long long>, long long> poch;
  std::map<long long, long long> eta;
  std::map<std::array<long long, 3>, long long> klein;
};

void require_integer_index(const ThetaIndex& idx) {
  if (idx.m2 % 2 != 0 || idx.b2 % 2 != 0)
    throw std::invalid_argument("render: half-integer theta index unsupported");
}

// Rewrites (q^x;q^2x) = (q^x;q^x)/(q^2x;q^2x) until no half-step symbol is
// left, then drops zero exponents.
void flatten_halfsteps(std::map<std::pair<long long, long long>, long long>& poch) {
  bool again = true;
  while (again) {
    again = false;
    for (auto it = poch.begin(); it != poch.end(); ++it) {
      auto [x, s] = it->first;
      long long e = it->second;
      if (e != 0 && s == 2 * x) {
        poch.erase(it);
        poch[{x, x}] += e;
        poch[{2 * x, 2 * x}] -= e;
        again = true;
        break;
      }
    }
  }
  std::erase_if(poch, [](const auto& kv) { return kv.second == 0; });
}

// theta_{m,b} = q^(b^2/4m)(q^2m;q^2m)(-q^(m-b);q^2m)(-q^(m+b);q^2m) with the
// negative-base symbols expanded via (-q^x;q^s) = (q^2x;q^2s)/(q^x;q^s).
void add_theta_pochhammer(ProductForm& f, const ThetaIndex& idx) {
  require_integer_index(idx);
  long long m2 = idx.m2, b2 = idx.b2;
  f.qpow += make_rat(b2 * b2, 8 * m2);
  if (b2 == m2) {
    f.coeff *= 2;
    f.poch[{2 * m2, 2 * m2}] += 2;
    f.poch[{m2, m2}] -= 1;
    return;
  }
  f.poch[{m2, m2}] += 1;
  f.poch[{m2 - b2, 2 * m2}] += 1;
  f.poch[{(m2 - b2) / 2, m2}] -= 1;
  f.poch[{m2 + b2, 2 * m2}] += 1;
  f.poch[{(m2 + b2) / 2, m2}] -= 1;
}

// theta_{m,b} = q^(-m/6) eta(4m)^2/eta(2m) * t(a;4m)/t(a;2m), a = 1/2 + b/2m,
// degenerating to 2 eta(4m)^2/eta(2m) at b = m.
void add_theta_etaklein(ProductForm& f, const ThetaIndex& idx) {
  require_integer_index(idx);
  long long m2 = idx.m2, b2 = idx.b2;
  f.eta[2 * m2] += 2;
  f.eta[m2] -= 1;
  if (b2 == m2) {
    f.coeff *= 2;
    return;
  }
  f.qpow -= make_rat(m2, 12);
  long long an = (m2 + b2) / 2, ad = m2;
  long long g = llgcd(an, ad);
  f.klein[{an / g, ad / g, 2 * m2}] += 1;
  f.klein[{an / g, ad / g, m2}] -= 1;
}

std::string q_power_name(long long e) {
  return e == 1 ? std::string("q") : "q^" + std::to_string(e);
}

std::string form_str(const ProductForm& f) {
  std::vector<std::pair<std::string, long long>> atoms;
  for (const auto& [N, e] : f.eta)
    if (e != 0) atoms.push_back({"eta(" + std::to_string(N) + ")", e});
  for (const auto& [key, e] : f.klein)
    if (e != 0)
      atoms.push_back({"t(" + std::to_string(key[0]) + "/" +
                           std::to_string(key[1]) + ";" + std::to_string(key[2]) +
                           ")",
                       e});
  for (const auto& [xs, e] : f.poch)
    if (e != 0)
      atoms.push_back(
          {"(" + q_power_name(xs.first) + ";" + q_power_name(xs.second) + ")", e});

  std::vector<std::string> num, den;
  for (const auto& [name, e] : atoms) {
    long long a = e < 0 ? -e : e;
    std::string s = name;
    if (a != 1) s += "^" + std::to_string(a);
    (e > 0 ? num : den).push_back(s);
  }

  std::string head;
  if (f.coeff != 1 || (num.empty() && f.qpow == 0)) head = f.coeff.get_str();
  if (f.qpow != 0) {
    if (!head.empty()) head += ' ';
    head += "q^(" + rat_str(f.qpow) + ")";
  }
  std::string out = head;
  for (const std::string& s : num) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  if (!den.empty()) {
    out += " / ";
    if (den.size() == 1) {
      out += den[0];
    } else {
      out += '(';
      for (size_t i = 0; i < den.size(); ++i) {
        if (i) out += ' ';
        out += den[i];
      }
      out += ')';
    }
  }
  return out;
}

std::string render_forms(const std::map<ThetaMonomial, Int>& terms,
                         RenderMode mode, long long poch_k, const Rat& qshift) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    ProductForm f;
    f.coeff = c;
    f.qpow = qshift;
    for (const ThetaIndex& idx : mono) {
      if (mode == RenderMode::pochhammer)
        add_theta_pochhammer(f, idx);
      else
        add_theta_etaklein(f, idx);
    }
    if (poch_k > 0) {
      if (mode == RenderMode::pochhammer) {
        f.poch[{1, 1}] -= poch_k;
      } else {
        // (q;q)^-k = q^(k/24) eta(1)^-k
        f.qpow += make_rat(poch_k, 24);
        f.eta[1] -= poch_k;
      }
    }
    if (mode == RenderMode::pochhammer) flatten_halfsteps(f.poch);
    if (!first) out += " + ";
    out += form_str(f);
    first = false;
  }
  return out;
}

}  // namespace

std::string sym_render(const ThetaExpr& e, RenderMode mode) {
  if (mode == RenderMode::theta) return e.str();
  return render_forms(e.terms(), mode, 0, Rat(0));
}

std::string render_cpsi(long long k, long long a2, const ThetaExpr& e,
                        RenderMode mode) {
  Rat shift = make_rat(a2 * a2 - k * k, 8 * k);
  if (mode == RenderMode::theta) {
    std::string out;
    if (shift != 0) out += "q^(" + rat_str(shift) + ") ";
    out += "(" + e.str() + ") / (q;q)^" + std::to_string(k);
    return out;
  }
  return render_forms(e.terms(), mode, k, shift);
}

namespace {

struct PTok {
  enum Kind { Num, QPow, Poch, Eta, Klein, Plus, Slash, LParen, RParen } kind;
  Int num;
  Rat r;
  long long a = 0, b = 1, N = 1;
  long long expo = 1;
};

class ProductLexer {
 public:
  explicit ProductLexer(const std::string& s) : s_(s) {}

  std::vector<PTok> lex() {
    std::vector<PTok> out;
    skip_ws();
    while (i_ < s_.size()) {
      out.push_back(next());
      skip_ws();
    }
    return out;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("product string: " + why + " at offset " +
                                std::to_string(i_));
  }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek(size_t ahead = 0) const {
    return i_ + ahead < s_.size() ? s_[i_ + ahead] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  long long parse_ll() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[i_] - '0');
      ++i_;
    }
    return neg ? -v : v;
  }
  long long parse_expo() {
    if (peek() != '^') return 1;
    ++i_;
    return parse_ll();
  }

  PTok next() {
    char c = peek();
    if (c == '+') {
      ++i_;
      return {PTok::Plus};
    }
    if (c == '/') {
      ++i_;
      return {PTok::Slash};
    }
    if (c == ')') {
      ++i_;
      return {PTok::RParen};
    }
    if (c == '(') {
      if (peek(1) == 'q') return lex_poch();
      ++i_;
      return {PTok::LParen};
    }
    if (c == 'q') return lex_qpow();
    if (c == 'e') return lex_eta();
    if (c == 't') return lex_klein();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      PTok t{PTok::Num};
      bool neg = c == '-';
      if (neg) ++i_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[i_++];
      t.num = Int(digits);
      if (neg) t.num = -t.num;
      t.expo = parse_expo();
      return t;
    }
    fail("unexpected character");
  }

  PTok lex_poch() {
    PTok t{PTok::Poch};
    expect('(');
    expect('q');
    t.a = peek() == '^' ? (++i_, parse_ll()) : 1;
    expect(';');
    expect('q');
    t.b = peek() == '^' ? (++i_, parse_ll()) : 1;
    expect(')');
    t.expo = parse_expo();
    if (t.a < 1 || t.b < 1) fail("pochhammer offsets must be positive");
    return t;
  }

  PTok lex_qpow() {
    PTok t{PTok::QPow};
    expect('q');
    expect('^');
    expect('(');
    long long num = parse_ll();
    long long den = 1;
    if (peek() == '/') {
      ++i_;
      den = parse_ll();
    }
    expect(')');
    if (den < 1) fail("q-power denominator must be positive");
    t.r = make_rat(num, den);
    return t;
  }

  PTok lex_eta() {
    PTok t{PTok::Eta};
    for (char c : {'e', 't', 'a', '('}) expect(c);
    t.N = parse_ll();
    expect(')');
    t.expo = parse_expo();
    if (t.N < 1) fail("eta argument must be positive");
    return t;
  }

  PTok lex_klein() {
    PTok t{PTok::Klein};
    expect('t');
    expect('(');
    t.a = parse_ll();
    expect('/');
    t.b = parse_ll();
    expect(';');
    t.N = parse_ll();
    expect(')');
    t.expo = parse_expo();
    if (t.N < 1 || t.b < 1 || t.a < 1 || t.a >= t.b)
      fail("klein form needs 0 < a < 1 and positive argument");
    return t;
  }
};

struct PAtom {
  PTok tok;
  long long e = 1;  // effective exponent (negated inside a denominator)
};

QSeries atom_eval(const PAtom& a, const Rat& inner) {
  switch (a.tok.kind) {
    case PTok::Num: {
      QSeries c = QSeries::monomial(Rat(a.tok.num), 0, 1, inner);
      return c.pow(a.e);
    }
    case PTok::QPow: {
      Rat r = a.tok.r * make_rat(a.e);
      if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        throw std::invalid_argument("product string: q-power out of range");
      return QSeries::monomial(Rat(1), r.get_num().get_si(), r.get_den().get_si(),
                               inner + r);
    }
    case PTok::Poch:
      return pochhammer(a.tok.a, 1, a.tok.b, inner).pow(a.e);
    case PTok::Eta:
      return eta_series(inner / make_int(a.tok.N) + 1).substitute(a.tok.N).pow(a.e);
    case PTok::Klein:
      return klein_form(a.tok.a, a.tok.b, inner / make_int(a.tok.N) + 1)
          .substitute(a.tok.N)
          .pow(a.e);
    default:
      throw std::invalid_argument("product string: misplaced token");
  }
}

Rat atom_slack(const PAtom& a) {
  Rat e = make_rat(a.e < 0 ? -a.e : a.e);
  switch (a.tok.kind) {
    case PTok::QPow: {
      Rat r = a.tok.r < 0 ? Rat(-a.tok.r) : a.tok.r;
      return e * r;
    }
    case PTok::Eta:
      return e * make_rat(a.tok.N, 12);
    case PTok::Klein:
      return e * make_rat(a.tok.N, 6);
    default:
      return Rat(0);
  }
}

}  // namespace

QSeries eval_product_string(const std::string& s, const Rat& prec) {
  if (prec <= 0) throw std::invalid_argument("eval_product_string: prec <= 0");
  std::vector<PTok> toks = ProductLexer(s).lex();

  std::vector<std::vector<PAtom>> terms;
  std::vector<PAtom> cur;
  bool in_denom = false;
  int depth = 0;
  for (const PTok& t : toks) {
    switch (t.kind) {
      case PTok::Plus:
        if (cur.empty()) throw std::invalid_argument("product string: empty term");
        if (depth != 0) throw std::invalid_argument("product string: '+' in group");
        terms.push_back(std::move(cur));
        cur.clear();
        in_denom = false;
        break;
      case PTok::Slash:
        if (in_denom) throw std::invalid_argument("product string: repeated '/'");
        in_denom = true;
        break;
      case PTok::LParen:
        ++depth;
        break;
      case PTok::RParen:
        if (--depth < 0) throw std::invalid_argument("product string: unbalanced ')'");
        break;
      default:
        cur.push_back({t, in_denom ? -t.expo : t.expo});
        break;
    }
  }
  if (depth != 0) throw std::invalid_argument("product string: unbalanced '('");
  if (cur.empty()) throw std::invalid_argument("product string: empty term");
  terms.push_back(std::move(cur));

  Rat slack(1);
  for (const auto& term : terms)
    for (const PAtom& a : term) slack += atom_slack(a) * 2;
  Rat inner = prec + slack;

  QSeries total = QSeries::zero(prec);
  for (const auto& term : terms) {
    QSeries t = QSeries::one(inner);
    for (const PAtom& a : term) t *= atom_eval(a, inner);
    total += t;
  }
  return total;
}

}  // namespace frobq
