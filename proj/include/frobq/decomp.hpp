#pragma once

#include <map>
#include <string>
#include <vector>

#include "frobq/qseries.hpp"
#include "frobq/thetafun.hpp"
#include "frobq/zetaseries.hpp"

namespace frobq {

// Product of theta constants as a sorted multiset of canonical indices; the
// empty product is the constant 1.
using ThetaMonomial = std::vector<ThetaIndex>;

// Memoized theta_const evaluations at one fixed precision.
class ThetaCache {
 public:
  explicit ThetaCache(Rat prec) : prec_(std::move(prec)) {}
  const Rat& prec() const { return prec_; }
  const QSeries& get(ThetaIndex idx);

 private:
  Rat prec_;
  std::map<ThetaIndex, QSeries> memo_;
};

// Integer-linear combination of theta monomials. Terms are kept canonical
// (indices folded into their canonical strip, factors sorted) and ordered
// lexicographically by factor list, so rendering is deterministic.
class ThetaExpr {
 public:
  ThetaExpr() = default;

  static ThetaExpr zero() { return {}; }
  static ThetaExpr one();
  static ThetaExpr theta(ThetaIndex idx);

  const std::map<ThetaMonomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds coeff * mono after canonicalizing the monomial.
  void add_term(ThetaMonomial mono, const Int& coeff);

  ThetaExpr& operator+=(const ThetaExpr& o);
  friend ThetaExpr operator+(ThetaExpr a, const ThetaExpr& b) { return a += b; }
  friend ThetaExpr operator*(const ThetaExpr& a, const ThetaExpr& b);
  ThetaExpr scaled(const Int& c) const;

  friend bool operator==(const ThetaExpr& a, const ThetaExpr& b) {
    return a.terms_ == b.terms_;
  }

  QSeries eval(ThetaCache& cache) const;

  std::string str() const;    // plain text, theta[m,b] notation
  std::string latex() const;  // LaTeX-like \theta_{m,b} notation

 private:
  std::map<ThetaMonomial, Int> terms_;
};

// Coefficient vector of the theta decomposition at level k/2: entry c2
// (doubled residue, c2 in [0, 2k), c2 == k mod 2) holds the symbolic series
// h_{k/2, c2/2}. Entries satisfy the mirror symmetry
// entries[c2] == entries[(2k - c2) mod 2k].
struct HVector {
  long long k = 0;
  std::map<long long, ThetaExpr> entries;

  // Entry for an arbitrary doubled residue (reduced mod 2k).
  const ThetaExpr& entry(long long c2) const;
  bool symmetric() const;
};

HVector h_one();   // k = 1: the trivial single-coefficient decomposition
HVector h_base();  // k = 2: h_{1,0} = theta_{1,1}, h_{1,1} = theta_{1,0}

// Level recursion steps (levels named by k = doubled level):
HVector h_step_full(const HVector& h);          // k even -> k + 2
HVector h_step_half(const HVector& h);          // k even -> k + 1
HVector h_step_half_to_full(const HVector& h);  // k odd  -> k + 1

// Default route: h_base, then h_step_full up to 2*floor(k/2), then
// h_step_half when k is odd.
HVector h_vector(long long k);

// Sum of entry * theta_two_var over the level's residues; equals
// jacobi_theta_shifted(prec)^k.
ZetaSeries reconstruct(long long k, Rat prec);

// CPsi_{k, a2/2} = q^(a2^2/8k - k/8) * h_{k/2, a2/2} / (q;q)_inf^k.
// Requires a2 >= 0 and a2 == k (mod 2).
QSeries cpsi_from_h(long long k, long long a2, const Rat& prec);

// Left-to-right rewriting by the two theta-product identities
//   theta_{2,2}theta_{6,0} + theta_{2,0}theta_{6,6} -> 2 theta_{2,1}theta_{6,3}
//   theta_{2,2}theta_{6,4} + theta_{2,0}theta_{6,2} ->
//       theta_{2,1}(theta_{6,1} + theta_{6,5})
// applied wherever a term pair differs by exactly one such pattern.
// Evaluation-preserving; fixed point when no pattern matches.
ThetaExpr sym_simplify(ThetaExpr e);

enum class RenderMode { theta, pochhammer, etaklein };

// Renders the expression term by term. pochhammer mode expands each
// theta_{m,b} through the triple product into a consolidated quotient of
// integer-offset Pochhammer symbols (q^x;q^s); etaklein mode expands into
// eta(N) = eta(N tau) and Klein forms t(a;N) = t_{a,0}(N tau).
std::string sym_render(const ThetaExpr& e, RenderMode mode);

// Renders q^(a2^2/8k - k/8) * e / (q;q)^k, the CPsi product formula shape.
std::string render_cpsi(long long k, long long a2, const ThetaExpr& e,
                        RenderMode mode);

// Evaluates a rendered product string (any mode) back to a series; accepts
// integers, q^(r), (q^x;q^s), eta(N), t(a/b;N), each with an optional signed
// ^e, products by juxtaposition, a single '/' per term whose denominator is
// one factor or a parenthesized factor group, and '+'-joined terms. Throws
// std::invalid_argument on malformed input.
QSeries eval_product_string(const std::string& s, const Rat& prec);

// Doubled value rendered as an integer or halved fraction ("3", "7/2").
std::string half_str(long long doubled);

}  // namespace frobq
