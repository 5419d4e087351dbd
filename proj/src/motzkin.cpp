#include "frobq/motzkin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "frobq/rational.hpp"

namespace frobq {

namespace {

void check_params(const char* who, int k, long long a2) {
  if (k < 1 || a2 < 0 || ((a2 - k) % 2) != 0)
    throw std::invalid_argument(std::string(who) +
                                ": need k >= 1 and a2 >= 0 with a2 == k mod 2");
}

// Heights of the reference path u^n 0 d^n; dominates every height reachable
// at position t by a path ending at a2*n, so deficits accrue nonnegatively.
long long ref_height(long long t, long long n, long long u, long long d) {
  if (t <= n) return u * t;
  if (t == n + 1) return u * n;
  return u * n + (t - n - 1) * d;
}

}  // namespace

bool path_valid(const MotzkinPath& p) {
  if (p.k < 1 || p.a2 < 0 || ((p.a2 - p.k) % 2) != 0) return false;
  if (p.steps.empty()) return false;
  long long u = (p.a2 + p.k) / 2;
  long long d = (p.a2 - p.k) / 2;
  long long h = 0;
  for (const MotzkinStep& st : p.steps) {
    if (st.rise < d || st.rise > u) return false;
    if ((long long)st.colors.size() != (p.k - p.a2) / 2 + st.rise) return false;
    int prev = 0;
    for (int c : st.colors) {
      if (c <= prev || c > p.k) return false;
      prev = c;
    }
    h += st.rise;
    if (h < 0) return false;
  }
  return 2 * h == p.a2 * ((long long)p.steps.size() - 1);
}

std::string path_str(const MotzkinPath& p) {
  std::string out;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (i) out += ' ';
    out += '(';
    out += std::to_string(p.steps[i].rise);
    out += ";{";
    for (std::size_t j = 0; j < p.steps[i].colors.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(p.steps[i].colors[j]);
    }
    out += "})";
  }
  return out;
}

long long path_deficit(const MotzkinPath& p) {
  if (!path_valid(p)) throw std::invalid_argument("path_deficit: invalid path");
  long long len = (long long)p.steps.size();
  if (len % 2 == 0)
    throw std::invalid_argument("path_deficit: length must be odd");
  long long n = (len - 1) / 2;
  long long u = (p.a2 + p.k) / 2;
  long long d = (p.a2 - p.k) / 2;
  long long h = 0;
  long long b = 0;
  // The t = 2n+1 column cancels against the reference path's, so b_M is the
  // height gap summed over t = 1..2n.
  for (long long t = 1; t <= 2 * n; ++t) {
    h += p.steps[(std::size_t)(t - 1)].rise;
    b += ref_height(t, n, u, d) - h;
  }
  return b;
}

MotzkinPath extend_path(const MotzkinPath& p) {
  long long u = (p.a2 + p.k) / 2;
  long long d = (p.a2 - p.k) / 2;
  MotzkinStep lead{u, {}};
  for (int c = 1; c <= p.k; ++c) lead.colors.push_back(c);
  MotzkinPath out{p.k, p.a2, {}};
  out.steps.reserve(p.steps.size() + 2);
  out.steps.push_back(std::move(lead));
  out.steps.insert(out.steps.end(), p.steps.begin(), p.steps.end());
  out.steps.push_back(MotzkinStep{d, {}});
  return out;
}

std::vector<MotzkinPath> enumerate_paths(int k, long long a2, int len) {
  check_params("enumerate_paths", k, a2);
  if (len < 1 || len > 6)
    throw std::invalid_argument("enumerate_paths: length must be in 1..6");
  if (k > 20)
    throw std::invalid_argument("enumerate_paths: k too large to enumerate");
  std::vector<MotzkinPath> out;
  long long end2 = a2 * (len - 1);
  if (end2 % 2 != 0) return out;  // half-integer endpoint: no paths
  long long target = end2 / 2;
  long long u = (a2 + k) / 2;
  long long d = (a2 - k) / 2;
  std::vector<std::vector<std::vector<int>>> subsets((std::size_t)k + 1);
  for (unsigned m = 0; m < (1u << k); ++m) {
    std::vector<int> s;
    for (int c = 1; c <= k; ++c)
      if (m & (1u << (c - 1))) s.push_back(c);
    std::size_t sz = s.size();
    subsets[sz].push_back(std::move(s));
  }
  std::vector<MotzkinStep> cur;
  auto rec = [&](auto&& self, int t, long long h) -> void {
    if (t == len) {
      if (h == target) out.push_back(MotzkinPath{k, a2, cur});
      return;
    }
    long long rem = len - t - 1;  // steps after this one
    for (long long j = d; j <= u; ++j) {
      long long h2 = h + j;
      if (h2 < 0) continue;
      if (h2 + rem * u < target || h2 + rem * d > target) continue;
      for (const auto& s : subsets[(std::size_t)((k - a2) / 2 + j)]) {
        cur.push_back(MotzkinStep{j, s});
        self(self, t + 1, h2);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0, 0);
  return out;
}

QSeries cm_poly(int k, long long a2, long long n, const Rat& prec) {
  check_params("cm_poly", k, a2);
  if (n < 0) throw std::invalid_argument("cm_poly: n must be nonnegative");
  long long len = 2 * n + 1;
  long long u = (a2 + k) / 2;
  long long d = (a2 - k) / 2;
  long long target = a2 * n;
  // States (height, deficit) -> total color weight. Deficit increments are
  // nonnegative for every state that can still reach the endpoint, so pruning
  // at prec is exact.
  std::map<std::pair<long long, long long>, Int> cur;
  cur[{0, 0}] = make_int(1);
  for (long long t = 1; t <= len; ++t) {
    std::map<std::pair<long long, long long>, Int> next;
    long long rem = len - t;
    for (const auto& [st, w] : cur) {
      long long h = st.first;
      long long B = st.second;
      for (long long j = d; j <= u; ++j) {
        long long h2 = h + j;
        if (h2 < 0) continue;
        if (h2 + rem * u < target || h2 + rem * d > target) continue;
        long long B2 = B + (t <= 2 * n ? ref_height(t, n, u, d) - h2 : 0);
        if (!(make_rat(B2) < prec)) continue;
        Int add = w * binomial(k, (k - a2) / 2 + j);
        next[{h2, B2}] += add;
      }
    }
    cur = std::move(next);
  }
  std::vector<std::pair<long long, Rat>> terms;
  for (const auto& [st, w] : cur) terms.emplace_back(st.second, Rat(w));
  return QSeries::from_terms(1, terms, prec);
}

MotzkinPath partition_to_path(const DrakeSymbol& d, int k, long long a2,
                              long long n) {
  check_params("partition_to_path", k, a2);
  if (!drake_valid(d, k, a2))
    throw std::invalid_argument("partition_to_path: invalid symbol");
  long long a1 = d.top.empty() ? -1 : d.top.front().value;
  long long b1 = d.bottom.empty() ? -1 : d.bottom.front().value;
  if (n <= 2 * std::max(a1 + 1, b1 + 1))
    throw std::invalid_argument("partition_to_path: need n > 2 max(a1+1, b1+1)");
  long long u = (a2 + k) / 2;
  long long dd = (a2 - k) / 2;
  std::vector<long long> alpha((std::size_t)n, 0), beta((std::size_t)n, 0);
  std::vector<std::vector<bool>> top_used((std::size_t)n,
                                          std::vector<bool>(k + 1, false));
  std::vector<std::vector<int>> bot_used((std::size_t)n);
  for (const ColoredEntry& e : d.top) {
    alpha[(std::size_t)e.value]++;
    top_used[(std::size_t)e.value][(std::size_t)e.color] = true;
  }
  for (const ColoredEntry& e : d.bottom) {
    beta[(std::size_t)e.value]++;
    bot_used[(std::size_t)e.value].push_back(e.color);
  }
  MotzkinPath out{k, a2, {}};
  out.steps.reserve((std::size_t)(2 * n + 1));
  // First n steps: top-row value counts, largest value first.
  for (long long i = 1; i <= n; ++i) {
    std::size_t p = (std::size_t)(n - i);
    MotzkinStep st{u - alpha[p], {}};
    for (int c = 1; c <= k; ++c)
      if (!top_used[p][(std::size_t)c]) st.colors.push_back(c);
    out.steps.push_back(std::move(st));
  }
  // Middle step: zero-color set, rise |top| - |bottom|.
  {
    MotzkinStep st{(long long)d.top.size() - (long long)d.bottom.size(),
                   d.zero_colors};
    std::sort(st.colors.begin(), st.colors.end());
    out.steps.push_back(std::move(st));
  }
  // Last n steps: bottom-row value counts, smallest value first.
  for (long long q = 1; q <= n; ++q) {
    std::size_t p = (std::size_t)(q - 1);
    MotzkinStep st{beta[p] + dd, bot_used[p]};
    std::sort(st.colors.begin(), st.colors.end());
    out.steps.push_back(std::move(st));
  }
  return out;
}

ConvergenceReport convergence_check(int k, long long a2, long long n,
                                    long long depth) {
  if (depth < 0)
    throw std::invalid_argument("convergence_check: depth must be nonnegative");
  Rat prec = make_rat(depth) + 1;
  QSeries cm = cm_poly(k, a2, n, prec);
  QSeries gen = cpsi_direct(k, a2, prec);
  ConvergenceReport rep;
  rep.n = n;
  rep.depth = depth;
  rep.guaranteed = (n + 1) / 2 - 2;
  rep.agreement = -1;
  for (long long e = 0; e <= depth; ++e) {
    if (cm.coeff(e) != gen.coeff(e)) break;
    rep.agreement = e;
  }
  rep.ok = rep.agreement >= std::min(rep.guaranteed, depth);
  return rep;
}

}  // namespace frobq
