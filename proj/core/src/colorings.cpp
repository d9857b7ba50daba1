#include "evpoly/colorings.hpp"

#include <algorithm>
#include <set>

#include "evpoly/errors.hpp"

namespace evpoly {
namespace {

// n * a for n >= 1 by doubling.
Element times(const Semigroup& g, const Element& a, unsigned n) {
  std::optional<Element> acc;
  Element base = a;
  while (n) {
    if (n & 1U) acc = acc ? g.add(*acc, base) : base;
    n >>= 1U;
    if (n) base = g.add(base, base);
  }
  return g.canonical(*acc);
}

std::vector<Point> box_points(std::size_t k, unsigned n) {
  std::vector<Point> out;
  Point x(k, 0);
  while (true) {
    out.push_back(x);
    std::size_t i = k;
    while (i > 0) {
      if (x[i - 1] < n) {
        ++x[i - 1];
        break;
      }
      x[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

bool within(const AdditiveColoring& chi, std::span<const unsigned> v) {
  auto b = chi.bound();
  return !b || std::all_of(v.begin(), v.end(), [&](unsigned x) { return x <= *b; });
}

void require_additive(const AdditiveColoring& chi) {
  if (!chi.known_additive()) throw PreconditionError("coloring failed the shift-stability check");
}

std::vector<ElementSet> as_sets(const std::vector<std::vector<Element>>& sets, const Semigroup& g) {
  std::vector<ElementSet> out;
  for (const auto& a : sets) {
    ElementSet s;
    for (const auto& x : a) s.insert(g.canonical(x));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<GridPoint> shifted_grid(std::size_t l, long long lo, long long hi) { return box_grid(l, lo, hi); }

// Grows the box until the minimal non-substantial elements are unchanged
// over two consecutive enlargements and the last box is complete.
bool stabilize(const SumsetColoring& sc, const GrowthOptions& options, std::vector<GrowthStage>& stages) {
  if (options.step == 0) throw PreconditionError("box step must be positive");
  for (unsigned n = options.start_box; n <= options.max_box; n += options.step) {
    auto rep = substantial_upper_ideal(*sc.coloring, sc.partition, n);
    stages.push_back({n, rep.minimal_non_substantial, rep.complete});
    const std::size_t s = stages.size();
    if (s >= 3 && stages[s - 1].complete && stages[s - 1].antichain == stages[s - 2].antichain &&
        stages[s - 2].antichain == stages[s - 3].antichain)
      return true;
  }
  return false;
}

// Indicator series of the substantial set: everything minus the upper ideal.
RationalGF substantial_gf(std::size_t k, const Antichain& m, std::size_t cap) {
  return RationalGF::untwisted(std::vector<unsigned>(k, 0), std::vector<unsigned>(k, 1)) -
         gf_of_upper_ideal(k, m, cap);
}

std::string point_text(std::span<const long long> n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

}  // namespace

AssociatedColoring::AssociatedColoring(std::shared_ptr<const Semigroup> g, std::vector<Element> generators)
    : g_(std::move(g)), gens_(std::move(generators)) {
  if (!g_) throw PreconditionError("associated coloring needs a semigroup");
  for (auto& a : gens_) {
    g_->check_element(a);
    a = g_->canonical(a);
  }
}

Color AssociatedColoring::color(std::span<const unsigned> v) const {
  if (v.size() != gens_.size()) throw ArityError("coloring arity mismatch");
  std::optional<Element> acc;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Element part = times(*g_, gens_[i], v[i]);
    acc = acc ? g_->canonical(g_->add(*acc, part)) : std::move(part);
  }
  if (acc) return *acc;
  auto e = g_->identity();
  if (!e) throw PreconditionError("color of the zero vector needs a neutral element");
  return g_->canonical(*e);
}

ExplicitColoring::ExplicitColoring(std::size_t k, unsigned bound, std::vector<Color> table)
    : k_(k), bound_(bound), table_(std::move(table)) {
  std::size_t expected = 1;
  for (std::size_t i = 0; i < k; ++i) expected *= bound + 1;
  if (table_.size() != expected)
    throw PreconditionError("explicit coloring needs " + std::to_string(expected) + " entries, got " +
                            std::to_string(table_.size()));
  witness_ = check_shift_stability(*this, bound_);
}

Color ExplicitColoring::color(std::span<const unsigned> v) const {
  if (v.size() != k_) throw ArityError("coloring arity mismatch");
  std::size_t idx = 0;
  for (unsigned x : v) {
    if (x > bound_) throw PreconditionError("explicit coloring queried outside [0," + std::to_string(bound_) + "]");
    idx = idx * (bound_ + 1) + x;
  }
  return table_[idx];
}

std::optional<ShiftWitness> check_shift_stability(const AdditiveColoring& chi, unsigned n) {
  const std::size_t k = chi.arity();
  const auto pts = box_points(k, n);
  std::vector<Color> colors;
  colors.reserve(pts.size());
  for (const auto& p : pts) colors.push_back(chi.color(p));
  Point s(k), t(k);
  for (std::size_t ia = 0; ia < pts.size(); ++ia)
    for (std::size_t ic = ia + 1; ic < pts.size(); ++ic) {
      if (colors[ia] != colors[ic]) continue;
      for (const auto& b : pts) {
        for (std::size_t i = 0; i < k; ++i) {
          s[i] = pts[ia][i] + b[i];
          t[i] = pts[ic][i] + b[i];
        }
        if (!within(chi, s) || !within(chi, t)) continue;
        if (chi.color(s) != chi.color(t)) return ShiftWitness{pts[ia], pts[ic], b};
      }
    }
  return std::nullopt;
}

std::vector<unsigned> block_norm(std::span<const unsigned> v, const BlockPartition& p) {
  validate_partition(p, v.size());
  std::vector<unsigned> out(p.size(), 0);
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i : p[j]) out[j] += v[i];
  return out;
}

std::vector<Point> slice_points(std::size_t k, const BlockPartition& p, std::span<const unsigned> n) {
  const auto blk = block_index(p, k);
  if (n.size() != p.size()) throw ArityError("slice norm must have one entry per block");
  std::vector<std::size_t> last(p.size(), 0);
  for (std::size_t j = 0; j < p.size(); ++j) last[j] = *std::max_element(p[j].begin(), p[j].end());
  std::vector<unsigned> left(n.begin(), n.end());
  std::vector<Point> out;
  Point x(k, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      out.push_back(x);
      return;
    }
    const std::size_t j = blk[i];
    if (i == last[j]) {
      x[i] = left[j];
      left[j] = 0;
      self(self, i + 1);
      left[j] = x[i];
      return;
    }
    const unsigned budget = left[j];
    for (unsigned v = 0; v <= budget; ++v) {
      x[i] = v;
      left[j] = budget - v;
      self(self, i + 1);
    }
    left[j] = budget;
  };
  rec(rec, 0);
  return out;
}

std::vector<Point> substantial_points(const AdditiveColoring& chi, const BlockPartition& p,
                                      std::span<const unsigned> n) {
  require_additive(chi);
  std::map<Color, Point> first;
  for (auto& x : slice_points(chi.arity(), p, n)) first.try_emplace(chi.color(x), std::move(x));
  std::vector<Point> out;
  for (auto& [c, x] : first) out.push_back(std::move(x));
  std::sort(out.begin(), out.end());
  return out;
}

SubstantialSetReport substantial_upper_ideal(const AdditiveColoring& chi, const BlockPartition& p, unsigned box) {
  require_additive(chi);
  const std::size_t k = chi.arity();
  validate_partition(p, k);
  if (auto b = chi.bound()) {
    // The search reaches [0, box+1]^k, whose slices span up to (box+1)|block|.
    std::size_t widest = 0;
    for (const auto& blk : p) widest = std::max(widest, blk.size());
    if ((static_cast<std::size_t>(box) + 1) * widest > *b)
      throw PreconditionError("box " + std::to_string(box) + " needs the coloring on [0," +
                              std::to_string((box + 1) * widest) + "], it is given on [0," + std::to_string(*b) + "]");
  }
  std::map<std::vector<unsigned>, std::set<Point>> slices;
  auto substantial = [&](std::span<const unsigned> x) {
    auto n = block_norm(x, p);
    auto it = slices.find(n);
    if (it == slices.end()) {
      auto pts = substantial_points(chi, p, n);
      it = slices.emplace(std::move(n), std::set<Point>(pts.begin(), pts.end())).first;
    }
    return it->second.count(Point(x.begin(), x.end())) > 0;
  };

  SubstantialSetReport rep;
  rep.box = box;
  for (const auto& x : box_points(k, box)) {
    if (substantial(x)) {
      rep.substantial.push_back(x);
      continue;
    }
    Point y = x;
    for (std::size_t i = 0; i < k; ++i) {
      if (y[i] == box) continue;
      ++y[i];
      if (substantial(y)) {
        std::string where;
        for (unsigned v : x) where += (where.empty() ? "" : ",") + std::to_string(v);
        throw VerificationError("non-substantial points are not upward closed at (" + where +
                                ") + e_" + std::to_string(i + 1) + "; the coloring is not additive");
      }
      --y[i];
    }
  }
  auto mins = minimal_elements(k, [&](std::span<const unsigned> x) { return !substantial(x); }, box);
  rep.minimal_non_substantial = std::move(mins.antichain);
  rep.complete = mins.complete;
  return rep;
}

SumsetColoring sumset_coloring(const std::vector<std::vector<Element>>& sets, std::shared_ptr<const Semigroup> g) {
  if (sets.empty()) throw PreconditionError("at least one set is required");
  SumsetColoring sc;
  std::vector<Element> gens;
  for (const auto& a : sets) {
    if (a.empty()) throw PreconditionError("sets must be nonempty");
    std::vector<std::size_t> block;
    for (const auto& x : a) {
      block.push_back(gens.size());
      gens.push_back(x);
    }
    sc.partition.push_back(std::move(block));
  }
  sc.coloring = std::make_shared<AssociatedColoring>(std::move(g), std::move(gens));
  return sc;
}

SumsetGrowthReport sumset_growth_sep(const std::vector<std::vector<Element>>& sets,
                                     std::shared_ptr<const Semigroup> g, const GrowthOptions& options) {
  if (!g || !g->identity()) throw PreconditionError("sumset growth needs a monoid");
  const auto sc = sumset_coloring(sets, g);
  const std::size_t k = sc.coloring->arity();
  const std::size_t l = sets.size();
  SumsetGrowthReport rep;
  if (!stabilize(sc, options, rep.stages)) return rep;

  auto f = p_substitution(substantial_gf(k, rep.stages.back().antichain, options.cap), sc.partition);
  SEPDescription sep = extract_sep(f);
  const auto ssets = as_sets(sets, *g);
  auto oracle = [&](std::span<const long long> n) {
    std::vector<unsigned> m(n.begin(), n.end());
    return Rational(static_cast<long>(multi_sumset(ssets, m, *g).size()));
  };
  rep.verification = verify_fit(sep, oracle, shifted_grid(l, 0, options.verify_max));
  if (!rep.verification.ok()) {
    const auto& mm = rep.verification.mismatches.front();
    throw VerificationError("sumset growth: formula gives " + mm.actual.to_string() + " but enumeration gives " +
                            mm.expected.to_string() + " at " + point_text(mm.point));
  }
  rep.sep = std::move(sep);
  rep.status = PipelineStatus::kOk;
  return rep;
}

CharacterSumReport character_sumset_exp_poly(const std::vector<std::vector<Element>>& sets,
                                             std::shared_ptr<const Semigroup> g, const Character& psi,
                                             const GrowthOptions& options) {
  if (!g || !g->identity()) throw PreconditionError("character sums need a monoid");
  const auto sc = sumset_coloring(sets, g);
  const auto& gens = sc.coloring->generators();
  const std::size_t k = gens.size();
  const std::size_t l = sets.size();

  std::vector<Element> sample;
  if (auto all = g->elements()) {
    sample = std::move(*all);
  } else {
    sample = gens;
    sample.push_back(*g->identity());
    for (const auto& a : gens)
      for (const auto& b : gens) sample.push_back(g->canonical(g->add(a, b)));
  }
  if (auto bad = validate_character(*g, psi, sample))
    throw PreconditionError("character is not multiplicative at (" + element_to_string(bad->first) + ", " +
                            element_to_string(bad->second) + ")");

  CharacterSumReport rep;
  if (!stabilize(sc, options, rep.stages)) return rep;

  // Weight every orthant by psi: numerator psi(chi(b)), denominators
  // twisted by psi(a_i).
  const unsigned m = psi.order();
  std::vector<unsigned> ex(k);
  for (std::size_t i = 0; i < k; ++i) ex[i] = psi.exponent(gens[i]);
  std::vector<GFTerm> twisted;
  const auto base = substantial_gf(k, rep.stages.back().antichain, options.cap);
  for (const auto& t : base.terms()) {
    long long e = 0;
    GFTerm u = t;
    for (std::size_t i = 0; i < k; ++i) {
      e += static_cast<long long>(ex[i]) * t.b[i];
      if (t.e[i] > 0) u.alpha[i] = Scalar::root_of_unity(m, ex[i]);
    }
    u.gamma = t.gamma * Scalar::root_of_unity(m, e % m);
    twisted.push_back(std::move(u));
  }
  auto f = p_substitution(RationalGF(k, std::move(twisted)), sc.partition);
  ExpPolyDescription ep = extract_exp_poly(f);

  const auto ssets = as_sets(sets, *g);
  auto oracle = [&](std::span<const long long> n) {
    std::vector<unsigned> mm(n.begin(), n.end());
    return character_sum(multi_sumset(ssets, mm, *g), psi);
  };
  const long long lo = static_cast<long long>(ep.threshold) + 1;
  rep.verification = verify_fit(ep, oracle, shifted_grid(l, lo, lo + options.verify_max - 1));
  if (!rep.verification.ok()) {
    const auto& mm = rep.verification.mismatches.front();
    throw VerificationError("character sum: formula gives " + mm.actual.to_string() + " but enumeration gives " +
                            mm.expected.to_string() + " at " + point_text(mm.point));
  }
  rep.exp_poly = std::move(ep);
  rep.status = PipelineStatus::kOk;
  return rep;
}

}  // namespace evpoly
