#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "evpoly/cyclotomic.hpp"
#include "evpoly/partition.hpp"
#include "evpoly/polynomial.hpp"

namespace evpoly {

/// gamma * x^b / prod_i (1 - alpha_i x_i)^{e_i}.
struct GFTerm {
  Scalar gamma;
  std::vector<unsigned> b;
  std::vector<Scalar> alpha;
  std::vector<unsigned> e;
};

/// Finite sum of GFTerms in k variables. Construction normalizes: all
/// scalars are moved into one cyclotomic context, alpha_i is recorded as 1
/// whenever e_i = 0 (a zero alpha is folded into e_i = 0), terms with equal
/// (b, alpha, e) are merged and zero terms dropped. Terms are kept sorted so
/// equal inputs give equal term lists.
class RationalGF {
 public:
  explicit RationalGF(std::size_t k) : k_(k) {}
  RationalGF(std::size_t k, std::vector<GFTerm> terms);

  /// gamma * x^b with no denominator.
  static RationalGF monomial(std::vector<unsigned> b, const Scalar& gamma = Scalar(1));
  /// gamma * x^b / prod (1 - x_i)^{e_i}.
  static RationalGF untwisted(std::vector<unsigned> b, std::vector<unsigned> e,
                              const Scalar& gamma = Scalar(1));

  std::size_t arity() const { return k_; }
  const std::vector<GFTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Common cyclotomic order of all scalars (1 for a rational series).
  unsigned order() const { return order_; }
  /// All alpha_i equal 1 and every gamma is rational.
  bool is_untwisted_rational() const;

 private:
  std::size_t k_;
  unsigned order_ = 1;
  std::vector<GFTerm> terms_;
};

/// [x^n] F.
Scalar coefficient(const RationalGF& f, std::span<const unsigned> n);

RationalGF add(const RationalGF& f, const RationalGF& g);
RationalGF scalar_mul(const Scalar& gamma, const RationalGF& f);
inline RationalGF operator+(const RationalGF& f, const RationalGF& g) { return add(f, g); }
inline RationalGF operator-(const RationalGF& f, const RationalGF& g) {
  return add(f, scalar_mul(Scalar(-1), g));
}

/// One summand c / (1 - beta y)^d of a univariate partial fraction expansion.
struct PartialFraction {
  Scalar coeff;
  Scalar beta;
  unsigned d;
};

/// Expands 1 / prod_t (1 - beta_t y)^{m_t} (distinct, nonzero beta_t) into
/// sum_{t, 1<=d<=m_t} c_{t,d} / (1 - beta_t y)^d.
std::vector<PartialFraction> partial_fractions(const std::vector<std::pair<Scalar, unsigned>>& factors);

/// Identifies x_i := y_j for i in block j. Blocks whose twists differ are
/// split by partial fractions so every output term keeps a single
/// denominator factor per variable.
RationalGF p_substitution(const RationalGF& f, const BlockPartition& p);

/// Word entry meaning "coordinate larger than the threshold".
inline constexpr int kInfinity = -1;
using Word = std::vector<int>;

/// All (c+2)^l words over {0..c, inf}; first position most significant,
/// entries ordered 0 < 1 < ... < c < inf.
std::vector<Word> all_words(std::size_t l, unsigned c);
Word word_of(std::span<const long long> n, unsigned c);

/// Strongly-eventually-polynomial certificate: threshold c and one
/// polynomial per word. The polynomial for w only involves the variables
/// whose entry is infinite.
struct SEPDescription {
  std::size_t arity = 0;
  unsigned threshold = 0;
  std::map<Word, PolynomialQ> table;

  Rational evaluate(std::span<const long long> n) const;
};

/// Closed form of the coefficients of an untwisted rational series. The
/// table reproduces coefficient(F, n) for every n, not only eventually.
SEPDescription extract_sep(const RationalGF& f);

struct ExpPolySummand {
  std::vector<unsigned> root;  // t in (Z/m)^l
  PolynomialC poly;
};

/// sum_t p_t(n) zeta_m^{<t,n>}, valid for all n with every coordinate above
/// `threshold`.
struct ExpPolyDescription {
  std::size_t arity = 0;
  unsigned order = 1;
  unsigned threshold = 0;
  std::vector<ExpPolySummand> summands;

  Scalar evaluate(std::span<const long long> n) const;
};

/// Reads off the exponential-polynomial form of a series whose twists are
/// roots of unity. The output context is the series' field, doubled when the
/// field order is odd and some twist has even order (e.g. -1 over Q).
ExpPolyDescription extract_exp_poly(const RationalGF& f);

}  // namespace evpoly
