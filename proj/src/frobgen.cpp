#include "frobq/frobgen.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace frobq {

namespace {

void check_residue(int k, long long a2) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (((a2 - k) % 2 + 2) % 2 != 0)
    throw std::invalid_argument("a must be congruent to k/2 mod 1 (a2 == k mod 2)");
}

long long row_sum(const Row& row) {
  long long s = 0;
  for (const auto& e : row) s += e.value;
  return s;
}

void row_str(std::ostringstream& os, const Row& row) {
  if (row.empty()) {
    os << "-";
    return;
  }
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) os << " ";
    os << row[i].value << "_" << row[i].color;
  }
}

// A strictly decreasing colored row is exactly a subset of the (value, color)
// grid, so the number of rows with length L and value sum S is the x^S y^L
// coefficient of prod_{v=0}^{budget} (1 + y x^v)^k. tab[L][S] holds it.
std::vector<std::vector<Int>> row_count_table(int k, long long budget) {
  size_t lmax = static_cast<size_t>(budget + k) + 1;
  std::vector<std::vector<Int>> tab(lmax, std::vector<Int>(budget + 1));
  tab[0][0] = 1;
  for (long long v = 0; v <= budget; ++v)
    for (int rep = 0; rep < k; ++rep)
      for (long long l = static_cast<long long>(lmax) - 2; l >= 0; --l)
        for (long long s = budget - v; s >= 0; --s)
          if (tab[l][s] != 0) tab[l + 1][s + v] += tab[l][s];
  return tab;
}

Int shape_count(const std::vector<std::vector<Int>>& tab, long long len, long long sum) {
  if (len < 0 || sum < 0 || len >= static_cast<long long>(tab.size()) ||
      sum >= static_cast<long long>(tab[0].size()))
    return 0;
  return tab[len][sum];
}

// Materialized rows grouped by (length, sum), only built when a visitor needs
// the symbols themselves. Includes the empty row at (0, 0).
using ShapeMap = std::map<std::pair<long long, long long>, std::vector<Row>>;

void extend_rows(int k, long long budget, Row& cur, long long sum, ShapeMap& out) {
  out[{static_cast<long long>(cur.size()), sum}].push_back(cur);
  long long vmax = budget - sum;
  int cmax = k;
  if (!cur.empty()) {
    if (cur.back().value < vmax) {
      vmax = cur.back().value;
      cmax = k;
    }
    if (cur.back().value == vmax) cmax = cur.back().color - 1;
  }
  for (long long v = vmax; v >= 0; --v) {
    int ctop = (v == vmax) ? cmax : k;
    for (int c = ctop; c >= 1; --c) {
      cur.push_back({v, c});
      extend_rows(k, budget, cur, sum + v, out);
      cur.pop_back();
    }
  }
}

ShapeMap rows_by_shape(int k, long long budget) {
  ShapeMap out;
  Row cur;
  if (budget >= 0) extend_rows(k, budget, cur, 0, out);
  return out;
}

// Visit all strictly decreasing color subsets of {1..k} of the given size.
void visit_color_subsets(int k, long long size,
                         const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<long long>(pick.size()) == size) {
      visit(pick);
      return;
    }
    long long need = size - static_cast<long long>(pick.size());
    for (int c = next; c >= need; --c) {
      pick.push_back(c);
      rec(c - 1);
      pick.pop_back();
    }
  };
  rec(k);
}

}  // namespace

long long fp_weight(const FrobPartition& f) {
  return static_cast<long long>(f.top.size()) + row_sum(f.top) + row_sum(f.bottom);
}

long long drake_weight(const DrakeSymbol& d) {
  return static_cast<long long>(d.top.size()) + static_cast<long long>(d.bottom.size()) +
         row_sum(d.top) + row_sum(d.bottom);
}

bool row_valid(const Row& row, int k) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i].value < 0 || row[i].color < 1 || row[i].color > k) return false;
    if (i > 0 && !(row[i] < row[i - 1])) return false;
  }
  return true;
}

bool fp_valid(const FrobPartition& f, int k, long long a2) {
  check_residue(k, a2);
  if (!row_valid(f.top, k) || !row_valid(f.bottom, k)) return false;
  return 2 * (static_cast<long long>(f.top.size()) - static_cast<long long>(f.bottom.size())) ==
         a2 - k;
}

bool drake_valid(const DrakeSymbol& d, int k, long long a2) {
  check_residue(k, a2);
  if (!row_valid(d.top, k) || !row_valid(d.bottom, k)) return false;
  for (size_t i = 0; i < d.zero_colors.size(); ++i) {
    if (d.zero_colors[i] < 1 || d.zero_colors[i] > k) return false;
    if (i > 0 && d.zero_colors[i] >= d.zero_colors[i - 1]) return false;
  }
  long long diff = static_cast<long long>(d.top.size()) - static_cast<long long>(d.bottom.size());
  return 2 * static_cast<long long>(d.zero_colors.size()) == k - a2 + 2 * diff;
}

FrobPartition drake_to_plain(const DrakeSymbol& d) {
  FrobPartition f;
  f.top = d.top;
  f.bottom.reserve(d.bottom.size() + d.zero_colors.size());
  for (const auto& e : d.bottom) f.bottom.push_back({e.value + 1, e.color});
  for (int c : d.zero_colors) f.bottom.push_back({0, c});
  return f;
}

DrakeSymbol plain_to_drake(const FrobPartition& f) {
  DrakeSymbol d;
  d.top = f.top;
  for (const auto& e : f.bottom) {
    if (e.value == 0)
      d.zero_colors.push_back(e.color);
    else
      d.bottom.push_back({e.value - 1, e.color});
  }
  return d;
}

std::string fp_str(const FrobPartition& f) {
  std::ostringstream os;
  os << "(";
  row_str(os, f.top);
  os << " / ";
  row_str(os, f.bottom);
  os << ")";
  return os.str();
}

std::string drake_str(const DrakeSymbol& d) {
  std::ostringstream os;
  os << "(";
  row_str(os, d.top);
  os << " / ";
  row_str(os, d.bottom);
  os << " ; {";
  for (size_t i = 0; i < d.zero_colors.size(); ++i) {
    if (i) os << " ";
    os << d.zero_colors[i];
  }
  os << "})";
  return os.str();
}

Int count_plain(int k, long long a2, long long n,
                const std::function<void(const FrobPartition&)>& visit) {
  check_residue(k, a2);
  if (n < 0) return 0;
  long long s_off = (a2 - k) / 2;  // |top| - |bottom|
  Int total = 0;
  if (!visit) {
    auto tab = row_count_table(k, n);
    for (long long r = 0; r < static_cast<long long>(tab.size()); ++r)
      for (long long st = 0; r + st <= n; ++st)
        total += shape_count(tab, r, st) * shape_count(tab, r - s_off, n - r - st);
    return total;
  }
  ShapeMap rows = rows_by_shape(k, n);
  for (const auto& [tshape, tops] : rows) {
    auto [r, st] = tshape;
    long long s = r - s_off;
    long long sb = n - r - st;
    if (s < 0 || sb < 0) continue;
    auto it = rows.find({s, sb});
    if (it == rows.end()) continue;
    total += Int(tops.size()) * Int(it->second.size());
    for (const Row& t : tops)
      for (const Row& b : it->second) visit(FrobPartition{t, b});
  }
  return total;
}

Int count_drake(int k, long long a2, long long n,
                const std::function<void(const DrakeSymbol&)>& visit) {
  check_residue(k, a2);
  if (n < 0) return 0;
  Int total = 0;
  if (!visit) {
    auto tab = row_count_table(k, n);
    long long lmax = static_cast<long long>(tab.size());
    for (long long r = 0; r < lmax; ++r)
      for (long long s = 0; s < lmax; ++s) {
        long long tsize2 = k - a2 + 2 * (r - s);
        if (tsize2 < 0 || tsize2 % 2 != 0 || tsize2 / 2 > k) continue;
        for (long long st = 0; r + s + st <= n; ++st)
          total += shape_count(tab, r, st) * shape_count(tab, s, n - r - s - st) *
                   binomial(k, tsize2 / 2);
      }
    return total;
  }
  ShapeMap rows = rows_by_shape(k, n);
  for (const auto& [tshape, tops] : rows) {
    auto [r, st] = tshape;
    for (const auto& [bshape, bots] : rows) {
      auto [s, sb] = bshape;
      if (r + s + st + sb != n) continue;
      long long tsize2 = k - a2 + 2 * (r - s);
      if (tsize2 < 0 || tsize2 % 2 != 0 || tsize2 / 2 > k) continue;
      long long tsize = tsize2 / 2;
      total += Int(tops.size()) * Int(bots.size()) * binomial(k, tsize);
      for (const Row& t : tops)
        for (const Row& b : bots)
          visit_color_subsets(k, tsize, [&](const std::vector<int>& zc) {
            visit(DrakeSymbol{t, b, zc});
          });
    }
  }
  return total;
}

QSeries cpsi_enumerated(int k, long long a2, long long nmax, EnumKind kind) {
  check_residue(k, a2);
  std::vector<std::pair<long long, Rat>> terms;
  for (long long n = 0; n <= nmax; ++n) {
    Int c = kind == EnumKind::plain ? count_plain(k, a2, n) : count_drake(k, a2, n);
    if (c != 0) terms.emplace_back(n, Rat(c));
  }
  return QSeries::from_terms(1, terms, make_rat(nmax + 1));
}

FrobProduct::FrobProduct(int k, Rat prec) : k_(k), prec_(std::move(prec)), f_(prec_) {
  check_residue(k, k);
  if (prec_ <= 0) return;
  // Slots outside |r| <= window_ can only hold terms of order at least
  // (window_ - k + 1)^2 / 2k >= prec: reaching zeta^r costs at least
  // ceil((|r|-k)/k) distinct positive q-powers per unit of color multiplicity
  // (the k zeta^-1 factors at n = 0 are free and are applied first).
  window_ = isqrt_ceil(prec_ * 2 * k) + k;
  ZetaSeries f(prec_);
  for (int j = 0; j <= k; ++j)
    f.add_term(-2 * j, QSeries::monomial(Rat(binomial(k, j)), 0, 1, prec_));
  auto keep = [this](long long r2) { return std::llabs(r2) <= 2 * window_; };
  for (long long n = 1; make_rat(n) < prec_; ++n) {
    for (int dir : {1, -1}) {
      ZetaSeries factor(prec_);
      for (int j = 0; j <= k; ++j) {
        QSeries m = QSeries::monomial(Rat(binomial(k, j)), j * n, 1, prec_);
        if (!m.is_zero() || j == 0) factor.add_term(dir * 2 * j, m);
      }
      f = (f * factor).pruned(keep);
    }
  }
  f_ = std::move(f);
}

QSeries FrobProduct::cpsi(long long a2) const {
  check_residue(k_, a2);
  long long s = (a2 - k_) / 2;
  if (std::llabs(s) > window_) return QSeries::zero(prec_);
  return f_.coeff(2 * s);
}

QSeries cpsi_direct(int k, long long a2, Rat prec) {
  return FrobProduct(k, std::move(prec)).cpsi(a2);
}

QSeries cphi_direct(int k, Rat prec) { return cpsi_direct(k, k, std::move(prec)); }

}  // namespace frobq
