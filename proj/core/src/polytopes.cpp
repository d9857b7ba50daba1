#include "evpoly/polytopes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "evpoly/errors.hpp"
#include "evpoly/lp.hpp"

namespace evpoly {
namespace {

mpz_class ceil_of(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class floor_of(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

ElementSet as_elements(const std::vector<LatticePoint>& pts) {
  ElementSet s;
  for (const auto& p : pts) s.insert(Element(p.begin(), p.end()));
  return s;
}

std::optional<LatticePoint> first_difference(const ElementSet& lhs, const ElementSet& rhs) {
  for (const auto& x : lhs)
    if (!rhs.count(x)) return LatticePoint(x.begin(), x.end());
  for (const auto& x : rhs)
    if (!lhs.count(x)) return LatticePoint(x.begin(), x.end());
  return std::nullopt;
}

// (q * lattice(mP)) + lattice(sP) in Z^k.
ElementSet decomposed(const RationalPolytope& p, unsigned q, unsigned mult, unsigned s) {
  IntegerLattice zk(p.dimension());
  return sumset(n_fold_sumset(as_elements(lattice_points(p, mult)), q, zk), as_elements(lattice_points(p, s)), zk);
}

std::set<Color> colors_of(const std::vector<LatticePoint>& pts, const AdditiveColoring& chi) {
  std::set<Color> out;
  Point v(chi.arity());
  for (const auto& x : pts) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (x[i] < 0) throw PreconditionError("coloring pipelines need a polytope in the nonnegative orthant");
      v[i] = static_cast<unsigned>(x[i]);
    }
    out.insert(chi.color(v));
  }
  return out;
}

}  // namespace

RationalPolytope::RationalPolytope(std::vector<std::vector<Rational>> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw PreconditionError("a polytope needs at least one vertex");
  k_ = vertices_[0].size();
  if (k_ == 0) throw PreconditionError("polytope dimension must be positive");
  mpz_class m = 1;
  for (const auto& v : vertices_) {
    if (v.size() != k_) throw ArityError("polytope vertices have different dimensions");
    for (const auto& c : v) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c.get_den_mpz_t());
  }
  if (!m.fits_slong_p()) throw ResourceError("polytope denominator too large");
  m_ = m.get_si();
}

bool RationalPolytope::in_nonnegative_orthant() const {
  for (const auto& v : vertices_)
    for (const auto& c : v)
      if (c < 0) return false;
  return true;
}

std::vector<LatticePoint> lattice_points(const RationalPolytope& p, unsigned n) {
  const std::size_t k = p.dimension();
  if (n == 0) return {LatticePoint(k, 0)};
  std::vector<long long> lo(k), hi(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    mpz_class a = ceil_of(mn * n), b = floor_of(mx * n);
    if (!a.fits_slong_p() || !b.fits_slong_p()) throw ResourceError("dilated polytope too large");
    lo[i] = a.get_si();
    hi[i] = b.get_si();
    if (lo[i] > hi[i]) return {};
  }
  std::vector<LatticePoint> out;
  LatticePoint x = lo;
  std::vector<Rational> scaled(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) scaled[i] = Rational(static_cast<long>(x[i]), n);
    if (in_convex_hull(p.vertices(), scaled)) out.push_back(x);
    std::size_t i = k;
    while (i > 0 && x[i - 1] == hi[i - 1]) {
      x[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++x[i - 1];
  }
  return out;
}

Quasipolynomial ehrhart_fit(const RationalPolytope& p) {
  const auto k = static_cast<unsigned>(p.dimension());
  const auto m = static_cast<unsigned>(p.denominator());
  // Per residue class: k+1 points to fit, 2(k+1) more to check.
  const long long last = static_cast<long long>(m) * 3 * (k + 1) - 1;
  try {
    return fit_quasipolynomial(
        [&](long long n) { return Rational(static_cast<long>(lattice_points(p, static_cast<unsigned>(n)).size())); },
        m, k, last);
  } catch (const FitError& e) {
    throw VerificationError(std::string("Ehrhart fit failed: ") + e.what());
  }
}

std::optional<LatticePoint> verify_decomposition_identity(const RationalPolytope& p, unsigned n) {
  if (!p.is_lattice()) throw PreconditionError("the decomposition identity needs a lattice polytope");
  const auto k = static_cast<unsigned>(p.dimension());
  if (n < k) throw PreconditionError("the decomposition identity needs n >= k");
  return first_difference(as_elements(lattice_points(p, n)), decomposed(p, n - k, 1, k));
}

std::optional<LatticePoint> verify_rational_decomposition(const RationalPolytope& p, unsigned n) {
  const auto k = static_cast<unsigned>(p.dimension());
  const auto m = static_cast<unsigned>(p.denominator());
  if (n < m * k) throw PreconditionError("the decomposition identity needs n >= mk");
  const unsigned r = n % m;
  return first_difference(as_elements(lattice_points(p, n)), decomposed(p, (n - m * k - r) / m, m, m * k + r));
}

std::size_t color_count(const RationalPolytope& p, const AdditiveColoring& chi, unsigned n) {
  if (chi.arity() != p.dimension()) throw ArityError("coloring arity differs from the polytope dimension");
  if (!p.in_nonnegative_orthant()) throw PreconditionError("coloring pipelines need a polytope in the nonnegative orthant");
  return colors_of(lattice_points(p, n), chi).size();
}

ColorCountFit color_count_fit(const RationalPolytope& p, const AdditiveColoring& chi,
                              const ColorCountOptions& options) {
  if (!chi.known_additive()) throw PreconditionError("coloring failed the shift-stability check");
  const auto k = static_cast<unsigned>(p.dimension());
  const auto m = static_cast<unsigned>(p.denominator());
  const unsigned degree = options.degree.value_or(k);
  std::map<unsigned, Rational> counts;
  auto count = [&](long long n) -> Rational {
    auto u = static_cast<unsigned>(n);
    auto it = counts.find(u);
    if (it == counts.end())
      it = counts.emplace(u, Rational(static_cast<long>(color_count(p, chi, u)))).first;
    return it->second;
  };

  for (unsigned start = 0; start <= options.max_start; ++start) {
    Quasipolynomial q;
    q.period = m;
    q.constituents.assign(m, PolynomialQ(1));
    bool ok = true;
    unsigned last = start;
    for (unsigned r = 0; r < m && ok; ++r) {
      unsigned first = start + (r + m - start % m) % m;
      std::vector<Sample> fit_on;
      for (unsigned j = 0; j <= degree; ++j) {
        const unsigned n = first + j * m;
        fit_on.push_back({{n}, count(n)});
      }
      try {
        q.constituents[r] = fit_polynomial(fit_on, 1, degree);
      } catch (const FitError&) {
        ok = false;
        break;
      }
      for (unsigned j = degree + 1; j <= degree + options.held_out && ok; ++j) {
        const long long n = first + j * m;
        last = std::max(last, static_cast<unsigned>(n));
        const long long pt[] = {n};
        ok = q.constituents[r].evaluate(pt) == count(n);
      }
    }
    if (!ok) continue;

    ColorCountFit out;
    out.start = start;
    std::vector<GridPoint> grid;
    for (long long n = start; n <= last; ++n) grid.push_back({n});
    out.verification = verify_fit(q, count, grid);
    out.fit = std::move(q);

    if (const auto* assoc = dynamic_cast<const AssociatedColoring*>(&chi)) {
      const Semigroup& g = assoc->semigroup();
      const auto base = colors_of(lattice_points(p, m), chi);
      for (long long n = std::max<long long>(start, m * k); n <= last; ++n) {
        const auto nu = static_cast<unsigned>(n);
        const unsigned r = nu % m;
        const unsigned reps = (nu - m * k - r) / m;
        auto tail = colors_of(lattice_points(p, m * k + r), chi);
        ElementSet rhs(tail.begin(), tail.end());
        if (reps > 0) rhs = sumset(n_fold_sumset(ElementSet(base.begin(), base.end()), reps, g), rhs, g);
        if (Rational(static_cast<long>(rhs.size())) != count(n))
          throw VerificationError("color count at n=" + std::to_string(n) + " differs from the sumset reduction");
      }
      out.reduction_checked = true;
    }
    return out;
  }
  throw InconclusiveError("color_count_fit: no start up to " + std::to_string(options.max_start) +
                          " passes the held-out points");
}

}  // namespace evpoly
