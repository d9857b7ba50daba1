#include "evpoly/fitting.hpp"

#include <algorithm>
#include <map>

#include "evpoly/errors.hpp"
#include "linear_solve.hpp"

namespace evpoly {
namespace {

Rational power(long long base, unsigned e) {
  mpz_class r;
  mpz_class b(static_cast<long>(base));
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return Rational(r);
}

Rational monomial_value(const Exponent& mono, std::span<const long long> n) {
  Rational v = 1;
  for (std::size_t i = 0; i < mono.size(); ++i)
    if (mono[i]) v *= power(n[i], mono[i]);
  return v;
}

void grow(std::vector<Exponent>& out, Exponent& cur, std::size_t i, unsigned left, const std::vector<bool>& mask) {
  if (i == cur.size()) {
    out.push_back(cur);
    return;
  }
  const unsigned top = mask.empty() || mask[i] ? left : 0;
  for (unsigned d = 0; d <= top; ++d) {
    cur[i] = d;
    grow(out, cur, i + 1, left - d, mask);
  }
  cur[i] = 0;
}

// Points with coordinates fixed where fixed[i] >= 0 and ranging over
// [lo, hi] elsewhere.
std::vector<GridPoint> slab(const std::vector<long long>& fixed, long long lo, long long hi) {
  std::vector<GridPoint> pts{GridPoint{}};
  for (long long f : fixed) {
    std::vector<GridPoint> next;
    for (const auto& p : pts) {
      if (f >= 0) {
        next.push_back(p);
        next.back().push_back(f);
      } else {
        for (long long v = lo; v <= hi; ++v) {
          next.push_back(p);
          next.back().push_back(v);
        }
      }
    }
    pts = std::move(next);
  }
  return pts;
}

}  // namespace

std::vector<Exponent> monomials_up_to(std::size_t num_vars, unsigned degree, const std::vector<bool>& mask) {
  std::vector<Exponent> all;
  Exponent cur(num_vars, 0);
  grow(all, cur, 0, degree, mask);
  std::stable_sort(all.begin(), all.end(), [](const Exponent& a, const Exponent& b) {
    unsigned da = 0, db = 0;
    for (unsigned x : a) da += x;
    for (unsigned x : b) db += x;
    return da < db;
  });
  return all;
}

PolynomialQ fit_polynomial(const std::vector<Sample>& samples, std::size_t num_vars, unsigned degree,
                           const std::vector<bool>& mask) {
  const auto monos = monomials_up_to(num_vars, degree, mask);
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& s : samples) {
    if (s.point.size() != num_vars) throw ArityError("fit_polynomial: sample arity mismatch");
    std::vector<Rational> row;
    row.reserve(monos.size());
    for (const auto& m : monos) row.push_back(monomial_value(m, s.point));
    rows.push_back(std::move(row));
    rhs.push_back(s.value);
  }
  auto x = detail::solve_exact(std::move(rows), std::move(rhs), monos.size());
  PolynomialQ p(num_vars);
  for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], x[i]);
  return p;
}

Rational Quasipolynomial::evaluate(long long n) const {
  const long long d = static_cast<long long>(period);
  const long long r = ((n % d) + d) % d;
  const long long pt[] = {n};
  return constituents.at(static_cast<std::size_t>(r)).evaluate(pt);
}

Quasipolynomial fit_quasipolynomial(const std::function<Rational(long long)>& oracle, unsigned period,
                                    unsigned degree, long long last) {
  if (period == 0) throw PreconditionError("quasipolynomial period must be positive");
  Quasipolynomial q;
  q.period = period;
  for (unsigned r = 0; r < period; ++r) {
    std::vector<Sample> fit_on;
    std::vector<Sample> held_out;
    for (long long n = r; n <= last; n += period)
      (fit_on.size() <= degree ? fit_on : held_out).push_back({{n}, oracle(n)});
    if (fit_on.size() <= degree)
      throw FitError("residue " + std::to_string(r) + ": not enough samples for degree " + std::to_string(degree));
    PolynomialQ p = fit_polynomial(fit_on, 1, degree);
    for (const auto& s : held_out)
      if (p.evaluate(s.point) != s.value)
        throw FitError("held-out mismatch at n=" + std::to_string(s.point[0]) + " in residue " + std::to_string(r));
    q.constituents.push_back(std::move(p));
  }
  return q;
}

SEPDescription fit_sep(const RationalOracle& oracle, std::size_t arity, const FitSepOptions& options) {
  if (options.min_threshold > options.max_threshold) throw PreconditionError("fit_sep: empty threshold range");
  std::map<GridPoint, Rational> cache;
  auto value = [&](const GridPoint& p) -> const Rational& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, oracle(p)).first;
    return it->second;
  };
  const long long span_fit = options.degree + 3;
  for (unsigned c = options.min_threshold; c <= options.max_threshold; ++c) {
    SEPDescription sep;
    sep.arity = arity;
    sep.threshold = c;
    bool ok = true;
    for (const Word& w : all_words(arity, c)) {
      std::vector<long long> fixed(w.begin(), w.end());
      std::vector<bool> mask(arity);
      for (std::size_t i = 0; i < arity; ++i) mask[i] = w[i] == kInfinity;
      std::vector<Sample> samples;
      for (auto& p : slab(fixed, c + 1, c + span_fit)) samples.push_back({p, value(p)});
      PolynomialQ poly(arity);
      try {
        poly = fit_polynomial(samples, arity, options.degree, mask);
      } catch (const FitError&) {
        ok = false;
        break;
      }
      for (auto& p : slab(fixed, c + 1, c + span_fit + 2)) {
        bool inside = true;
        for (std::size_t i = 0; i < arity; ++i)
          if (mask[i] && p[i] > c + span_fit) inside = false;
        if (!inside && poly.evaluate(p) != value(p)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      sep.table.emplace(w, std::move(poly));
    }
    if (ok) return sep;
  }
  throw InconclusiveError("fit_sep: no threshold in [" + std::to_string(options.min_threshold) + ", " +
                          std::to_string(options.max_threshold) + "] passes the held-out shell");
}

ExpPolyDescription fit_exp_poly(const ScalarOracle& oracle, std::size_t arity, unsigned order,
                                const std::vector<std::vector<unsigned>>& roots, const FitExpPolyOptions& options) {
  if (order == 0) throw PreconditionError("fit_exp_poly: order must be positive");
  std::vector<std::vector<unsigned>> ts;
  for (auto t : roots) {
    if (t.size() != arity) throw ArityError("fit_exp_poly: root arity mismatch");
    for (auto& x : t) x %= order;
    if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(std::move(t));
  }
  std::sort(ts.begin(), ts.end());
  const auto monos = monomials_up_to(arity, options.degree);
  const std::size_t unknowns = ts.size() * monos.size();
  const long long lo = options.threshold + 1;
  const long long span_fit = static_cast<long long>(options.degree + 1) * order;

  auto embed = [&](const Scalar& v) {
    if (order % v.order() != 0)
      throw ContextError("fit_exp_poly: value in Q(zeta_" + std::to_string(v.order()) + ") outside Q(zeta_" +
                         std::to_string(order) + ")");
    return v.embed(order);
  };
  auto row_for = [&](const GridPoint& n) {
    std::vector<Scalar> row;
    row.reserve(unknowns);
    for (const auto& t : ts) {
      long long e = 0;
      for (std::size_t i = 0; i < arity; ++i) e += static_cast<long long>(t[i]) * n[i];
      const Scalar z = Scalar::root_of_unity(order, e % order);
      for (const auto& m : monos) row.push_back(z * Scalar(monomial_value(m, n)));
    }
    return row;
  };

  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (const auto& n : box_grid(arity, lo, lo + span_fit - 1)) {
    rows.push_back(row_for(n));
    rhs.push_back(embed(oracle(n)));
  }
  auto x = detail::solve_exact(std::move(rows), std::move(rhs), unknowns);

  ExpPolyDescription out;
  out.arity = arity;
  out.order = order;
  out.threshold = options.threshold;
  for (std::size_t j = 0; j < ts.size(); ++j) {
    PolynomialC p(arity);
    for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], x[j * monos.size() + i]);
    if (!p.is_zero()) out.summands.push_back({ts[j], std::move(p)});
  }
  for (const auto& n : box_grid(arity, lo, lo + span_fit + 1)) {
    bool fitted = true;
    for (long long v : n) fitted = fitted && v < lo + span_fit;
    if (!fitted && !(out.evaluate(n) == embed(oracle(n))))
      throw FitError("fit_exp_poly: held-out mismatch");
  }
  return out;
}

std::vector<GridPoint> box_grid(std::size_t arity, long long lo, long long hi) {
  return slab(std::vector<long long>(arity, -1), lo, hi);
}

FitReport verify_fit(const ScalarOracle& fit, const ScalarOracle& oracle, const std::vector<GridPoint>& grid) {
  FitReport report;
  for (const auto& p : grid) {
    Scalar expected = oracle(p);
    Scalar actual = fit(p);
    ++report.checked;
    if (!(expected == actual)) report.mismatches.push_back({p, std::move(expected), std::move(actual)});
  }
  return report;
}

FitReport verify_fit(const SEPDescription& fit, const RationalOracle& oracle, const std::vector<GridPoint>& grid) {
  return verify_fit([&](std::span<const long long> n) { return Scalar(fit.evaluate(n)); },
                    [&](std::span<const long long> n) { return Scalar(oracle(n)); }, grid);
}

FitReport verify_fit(const ExpPolyDescription& fit, const ScalarOracle& oracle, const std::vector<GridPoint>& grid) {
  return verify_fit([&](std::span<const long long> n) { return fit.evaluate(n); }, oracle, grid);
}

FitReport verify_fit(const Quasipolynomial& fit, const std::function<Rational(long long)>& oracle,
                     const std::vector<GridPoint>& grid) {
  for (const auto& p : grid)
    if (p.size() != 1) throw ArityError("quasipolynomial grid must be one-dimensional");
  return verify_fit([&](std::span<const long long> n) { return Scalar(fit.evaluate(n[0])); },
                    [&](std::span<const long long> n) { return Scalar(oracle(n[0])); }, grid);
}

bool has_integer_coefficients(const SEPDescription& sep) {
  for (const auto& [w, p] : sep.table)
    if (!has_integer_coefficients(p)) return false;
  return true;
}

bool has_integer_coefficients(const Quasipolynomial& q) {
  for (const auto& p : q.constituents)
    if (!has_integer_coefficients(p)) return false;
  return true;
}

}  // namespace evpoly
