#include "evpoly/rational_gf.hpp"

#include <algorithm>

#include "evpoly/errors.hpp"

namespace evpoly {

namespace {

int compare(const Scalar& a, const Scalar& b) {
  if (a.order() != b.order()) return a.order() < b.order() ? -1 : 1;
  auto ca = a.coeffs();
  auto cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    int c = cmp(ca[i], cb[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

struct TermKeyLess {
  bool operator()(const GFTerm& x, const GFTerm& y) const {
    if (x.b != y.b) return x.b < y.b;
    if (x.e != y.e) return x.e < y.e;
    for (std::size_t i = 0; i < x.alpha.size(); ++i) {
      int c = compare(x.alpha[i], y.alpha[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

Scalar one_in(unsigned order) { return Scalar(1).embed(order); }

bool is_one(const Scalar& s) {
  auto q = s.as_rational();
  return q && *q == 1;
}

}  // namespace

RationalGF::RationalGF(std::size_t k, std::vector<GFTerm> terms) : k_(k) {
  for (const auto& t : terms) {
    if (t.b.size() != k || t.alpha.size() != k || t.e.size() != k)
      throw ArityError("GF term arity does not match k=" + std::to_string(k));
    auto note = [&](const Scalar& s) {
      if (s.order() == 1 || s.order() == order_) return;
      if (order_ != 1)
        throw ContextError("mixed cyclotomic contexts in one series: orders " + std::to_string(order_) +
                           " and " + std::to_string(s.order()));
      order_ = s.order();
    };
    note(t.gamma);
    for (const auto& a : t.alpha) note(a);
  }
  std::map<GFTerm, Scalar, TermKeyLess> merged;
  for (auto& t : terms) {
    t.gamma = t.gamma.embed(order_);
    for (std::size_t i = 0; i < k; ++i) {
      t.alpha[i] = t.alpha[i].embed(order_);
      if (t.alpha[i].is_zero()) t.e[i] = 0;
      if (t.e[i] == 0) t.alpha[i] = one_in(order_);
    }
    Scalar g = t.gamma;
    auto [it, inserted] = merged.try_emplace(std::move(t), g);
    if (!inserted) it->second += g;
  }
  for (auto& [key, gamma] : merged) {
    if (gamma.is_zero()) continue;
    GFTerm t = key;
    t.gamma = gamma;
    terms_.push_back(std::move(t));
  }
}

RationalGF RationalGF::monomial(std::vector<unsigned> b, const Scalar& gamma) {
  const std::size_t k = b.size();
  return RationalGF(k, {GFTerm{gamma, std::move(b), std::vector<Scalar>(k, Scalar(1)),
                               std::vector<unsigned>(k, 0)}});
}

RationalGF RationalGF::untwisted(std::vector<unsigned> b, std::vector<unsigned> e, const Scalar& gamma) {
  const std::size_t k = b.size();
  return RationalGF(k, {GFTerm{gamma, std::move(b), std::vector<Scalar>(k, Scalar(1)), std::move(e)}});
}

bool RationalGF::is_untwisted_rational() const {
  for (const auto& t : terms_) {
    if (!t.gamma.as_rational()) return false;
    for (const auto& a : t.alpha)
      if (!is_one(a)) return false;
  }
  return true;
}

Scalar coefficient(const RationalGF& f, std::span<const unsigned> n) {
  if (n.size() != f.arity()) throw ArityError("coefficient index arity mismatch");
  Scalar total = Scalar(0).embed(f.order());
  for (const auto& t : f.terms()) {
    Scalar prod = t.gamma;
    for (std::size_t i = 0; i < n.size() && !prod.is_zero(); ++i) {
      if (n[i] < t.b[i]) {
        prod = Scalar(0);
        break;
      }
      const unsigned d = n[i] - t.b[i];
      if (t.e[i] == 0) {
        if (d != 0) prod = Scalar(0);
        continue;
      }
      prod *= Scalar(binomial(static_cast<long long>(d) + t.e[i] - 1, t.e[i] - 1));
      if (!is_one(t.alpha[i])) prod *= t.alpha[i].pow(d);
    }
    if (!prod.is_zero()) total += prod;
  }
  return total;
}

RationalGF add(const RationalGF& f, const RationalGF& g) {
  if (f.arity() != g.arity()) throw ArityError("add: series have different numbers of variables");
  std::vector<GFTerm> terms = f.terms();
  terms.insert(terms.end(), g.terms().begin(), g.terms().end());
  return RationalGF(f.arity(), std::move(terms));
}

RationalGF scalar_mul(const Scalar& gamma, const RationalGF& f) {
  std::vector<GFTerm> terms = f.terms();
  for (auto& t : terms) t.gamma *= gamma;
  return RationalGF(f.arity(), std::move(terms));
}

std::vector<PartialFraction> partial_fractions(const std::vector<std::pair<Scalar, unsigned>>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].first.is_zero()) throw PreconditionError("partial_fractions: zero root");
    for (std::size_t j = 0; j < i; ++j)
      if (factors[i].first == factors[j].first) throw PreconditionError("partial_fractions: repeated root");
  }
  std::vector<PartialFraction> out;
  for (std::size_t t = 0; t < factors.size(); ++t) {
    const auto& [beta_t, m_t] = factors[t];
    if (m_t == 0) continue;
    // With u = 1 - beta_t y, expand prod_{s != t} (1 - beta_s y)^{-m_s} in u
    // up to u^{m_t - 1}; then c_{t, m_t - j} is the u^j coefficient.
    std::vector<Scalar> series(m_t, Scalar(0));
    series[0] = Scalar(1);
    for (std::size_t s = 0; s < factors.size(); ++s) {
      if (s == t || factors[s].second == 0) continue;
      const unsigned m_s = factors[s].second;
      Scalar gamma = factors[s].first / beta_t;
      Scalar a = Scalar(1) - gamma;  // nonzero since roots are distinct
      Scalar rho = gamma / a;
      Scalar scale = a.pow(-static_cast<long long>(m_s));
      std::vector<Scalar> factor(m_t);
      Scalar rho_pow = Scalar(1);
      for (unsigned j = 0; j < m_t; ++j) {
        Rational c = binomial(static_cast<long long>(m_s) + j - 1, j);
        if (j % 2) c = -c;
        factor[j] = scale * rho_pow * Scalar(c);
        rho_pow *= rho;
      }
      std::vector<Scalar> next(m_t, Scalar(0));
      for (unsigned i = 0; i < m_t; ++i) {
        if (series[i].is_zero()) continue;
        for (unsigned j = 0; i + j < m_t; ++j) next[i + j] += series[i] * factor[j];
      }
      series = std::move(next);
    }
    for (unsigned j = 0; j < m_t; ++j)
      if (!series[j].is_zero()) out.push_back({series[j], beta_t, m_t - j});
  }
  return out;
}

RationalGF p_substitution(const RationalGF& f, const BlockPartition& p) {
  validate_partition(p, f.arity());
  const std::size_t l = p.size();
  std::vector<GFTerm> out;
  for (const auto& t : f.terms()) {
    std::vector<unsigned> b(l, 0);
    std::vector<std::vector<PartialFraction>> options(l);
    for (std::size_t j = 0; j < l; ++j) {
      std::vector<std::pair<Scalar, unsigned>> factors;
      for (std::size_t i : p[j]) {
        b[j] += t.b[i];
        if (t.e[i] == 0) continue;
        auto it = std::find_if(factors.begin(), factors.end(),
                               [&](const auto& fa) { return fa.first == t.alpha[i]; });
        if (it == factors.end())
          factors.emplace_back(t.alpha[i], t.e[i]);
        else
          it->second += t.e[i];
      }
      if (factors.empty())
        options[j].push_back({Scalar(1), Scalar(1), 0});
      else if (factors.size() == 1)
        options[j].push_back({Scalar(1), factors[0].first, factors[0].second});
      else
        options[j] = partial_fractions(factors);
    }
    // Cartesian product of the per-block expansions.
    std::vector<std::size_t> pick(l, 0);
    while (true) {
      GFTerm nt{t.gamma, b, std::vector<Scalar>(l), std::vector<unsigned>(l)};
      for (std::size_t j = 0; j < l; ++j) {
        const auto& o = options[j][pick[j]];
        nt.gamma *= o.coeff;
        nt.alpha[j] = o.beta;
        nt.e[j] = o.d;
      }
      out.push_back(std::move(nt));
      std::size_t j = 0;
      while (j < l && ++pick[j] == options[j].size()) pick[j++] = 0;
      if (j == l) break;
    }
  }
  return RationalGF(l, std::move(out));
}

std::vector<Word> all_words(std::size_t l, unsigned c) {
  std::vector<int> alphabet;
  for (unsigned v = 0; v <= c; ++v) alphabet.push_back(static_cast<int>(v));
  alphabet.push_back(kInfinity);
  std::vector<Word> out;
  std::vector<std::size_t> idx(l, 0);
  while (true) {
    Word w(l);
    for (std::size_t i = 0; i < l; ++i) w[i] = alphabet[idx[i]];
    out.push_back(std::move(w));
    std::size_t i = l;
    while (i > 0) {
      --i;
      if (++idx[i] < alphabet.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (l == 0) return out;
  }
}

Word word_of(std::span<const long long> n, unsigned c) {
  Word w(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 0) throw PreconditionError("SEP evaluation at a negative coordinate");
    w[i] = n[i] <= static_cast<long long>(c) ? static_cast<int>(n[i]) : kInfinity;
  }
  return w;
}

Rational SEPDescription::evaluate(std::span<const long long> n) const {
  if (n.size() != arity) throw ArityError("SEP evaluation arity mismatch");
  return table.at(word_of(n, threshold)).evaluate(n);
}

SEPDescription extract_sep(const RationalGF& f) {
  if (!f.is_untwisted_rational())
    throw UnsupportedError("extract_sep needs untwisted denominators and rational coefficients; "
                           "use extract_exp_poly");
  const std::size_t l = f.arity();
  unsigned c = 0;
  for (const auto& t : f.terms())
    for (unsigned bi : t.b) c = std::max(c, bi);

  // Per term and coordinate: exact values at 0..c and the polynomial that
  // holds above c.
  struct Factor {
    std::vector<Rational> small;
    PolynomialQ large;
  };
  std::vector<std::vector<Factor>> factors;
  std::vector<Rational> gammas;
  for (const auto& t : f.terms()) {
    gammas.push_back(*t.gamma.as_rational());
    std::vector<Factor> per;
    for (std::size_t i = 0; i < l; ++i) {
      Factor fa{std::vector<Rational>(c + 1, Rational(0)), PolynomialQ(l)};
      for (unsigned n = 0; n <= c; ++n) {
        if (n < t.b[i]) continue;
        if (t.e[i] == 0)
          fa.small[n] = n == t.b[i] ? 1 : 0;
        else
          fa.small[n] = binomial(static_cast<long long>(n) - t.b[i] + t.e[i] - 1, t.e[i] - 1);
      }
      if (t.e[i] > 0) fa.large = binomial_polynomial(l, i, t.b[i], t.e[i]);
      per.push_back(std::move(fa));
    }
    factors.push_back(std::move(per));
  }

  SEPDescription sep;
  sep.arity = l;
  sep.threshold = c;
  for (const auto& w : all_words(l, c)) {
    PolynomialQ acc(l);
    for (std::size_t ti = 0; ti < factors.size(); ++ti) {
      Rational scale = gammas[ti];
      PolynomialQ prod = PolynomialQ::constant(l, Rational(1));
      for (std::size_t i = 0; i < l && scale != 0; ++i) {
        if (w[i] == kInfinity)
          prod = prod * factors[ti][i].large;
        else
          scale *= factors[ti][i].small[static_cast<std::size_t>(w[i])];
      }
      if (scale == 0 || prod.is_zero()) continue;
      acc += prod * scale;
    }
    sep.table.emplace(w, std::move(acc));
  }
  return sep;
}

Scalar ExpPolyDescription::evaluate(std::span<const long long> n) const {
  if (n.size() != arity) throw ArityError("exp-poly evaluation arity mismatch");
  Scalar total = Scalar(0).embed(order);
  for (const auto& s : summands) {
    long long dot = 0;
    for (std::size_t i = 0; i < n.size(); ++i) dot = (dot + static_cast<long long>(s.root[i]) * (n[i] % order)) % order;
    total += s.poly.evaluate(n) * Scalar::root_of_unity(order, dot);
  }
  return total;
}

ExpPolyDescription extract_exp_poly(const RationalGF& f) {
  const std::size_t l = f.arity();
  auto exponents_in = [&](unsigned m) -> std::optional<std::vector<std::vector<unsigned>>> {
    std::vector<std::vector<unsigned>> out;
    for (const auto& t : f.terms()) {
      std::vector<unsigned> roots(l, 0);
      for (std::size_t i = 0; i < l; ++i) {
        auto r = t.alpha[i].embed(m).root_exponent();
        if (!r) return std::nullopt;
        roots[i] = *r;
      }
      out.push_back(std::move(roots));
    }
    return out;
  };
  unsigned m = f.order();
  auto roots = exponents_in(m);
  if (!roots && m % 2 == 1) {
    m *= 2;
    roots = exponents_in(m);
  }
  if (!roots) throw UnsupportedError("extract_exp_poly: a twist is not a root of unity in Q(zeta_" +
                                     std::to_string(f.order()) + ")");

  ExpPolyDescription out;
  out.arity = l;
  out.order = m;
  std::map<std::vector<unsigned>, PolynomialC> grouped;
  for (std::size_t ti = 0; ti < f.terms().size(); ++ti) {
    const auto& t = f.terms()[ti];
    for (unsigned bi : t.b) out.threshold = std::max(out.threshold, bi);
    // Above the threshold, a coordinate without denominator contributes 0.
    if (std::any_of(t.e.begin(), t.e.end(), [](unsigned e) { return e == 0; })) continue;
    Scalar scale = t.gamma.embed(m);
    PolynomialQ prod = PolynomialQ::constant(l, Rational(1));
    for (std::size_t i = 0; i < l; ++i) {
      scale *= t.alpha[i].embed(m).pow(-static_cast<long long>(t.b[i]));
      prod = prod * binomial_polynomial(l, i, t.b[i], t.e[i]);
    }
    PolynomialC term = to_scalar_polynomial(prod) * scale;
    auto [it, inserted] = grouped.try_emplace((*roots)[ti], term);
    if (!inserted) it->second += term;
  }
  for (auto& [root, poly] : grouped)
    if (!poly.is_zero()) out.summands.push_back({root, std::move(poly)});
  return out;
}

}  // namespace evpoly
