#include "evpoly/orthants.hpp"

#include <algorithm>
#include <set>

#include "evpoly/errors.hpp"

namespace evpoly {

GeneralizedOrthant GeneralizedOrthant::empty(std::size_t k) { return GeneralizedOrthant(k); }

GeneralizedOrthant GeneralizedOrthant::above(Point s) {
  const std::size_t k = s.size();
  return GeneralizedOrthant(std::move(s), std::vector<bool>(k, false));
}

GeneralizedOrthant::GeneralizedOrthant(Point s, std::vector<bool> frozen)
    : k_(s.size()), s_(std::move(s)), frozen_(std::move(frozen)) {
  if (frozen_.size() != k_) throw ArityError("orthant frozen-set size does not match base point");
}

bool GeneralizedOrthant::contains(std::span<const unsigned> x) const {
  if (x.size() != k_) throw ArityError("orthant membership: dimension mismatch");
  if (empty_) return false;
  for (std::size_t i = 0; i < k_; ++i) {
    if (frozen_[i] ? x[i] != s_[i] : x[i] < s_[i]) return false;
  }
  return true;
}

bool GeneralizedOrthant::includes(const GeneralizedOrthant& o) const {
  if (o.k_ != k_) throw ArityError("orthant inclusion: dimension mismatch");
  if (o.empty_) return true;
  if (empty_) return false;
  for (std::size_t i = 0; i < k_; ++i) {
    if (frozen_[i]) {
      if (!o.frozen_[i] || o.s_[i] != s_[i]) return false;
    } else if (o.s_[i] < s_[i]) {
      return false;
    }
  }
  return true;
}

SimpleSet::SimpleSet(std::size_t k, std::vector<GeneralizedOrthant> orthants) : k_(k) {
  for (auto& o : orthants) {
    if (o.dimension() != k) throw ArityError("simple set: orthant dimension mismatch");
    if (!o.is_empty()) orthants_.push_back(std::move(o));
  }
}

SimpleSet SimpleSet::everything(std::size_t k) {
  return SimpleSet(k, {GeneralizedOrthant::above(Point(k, 0))});
}

bool is_antichain(const std::vector<Point>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      bool le = true;
      for (std::size_t c = 0; c < points[i].size() && le; ++c) le = points[i][c] <= points[j][c];
      if (le) return false;
    }
  return true;
}

GeneralizedOrthant orthant_intersect(std::span<const GeneralizedOrthant> os) {
  if (os.empty()) throw PreconditionError("orthant_intersect needs at least one orthant");
  const std::size_t k = os[0].dimension();
  Point s(k, 0);
  std::vector<bool> frozen(k, false);
  for (const auto& o : os) {
    if (o.dimension() != k) throw ArityError("orthant_intersect: dimension mismatch");
    if (o.is_empty()) return GeneralizedOrthant::empty(k);
  }
  for (std::size_t i = 0; i < k; ++i) {
    unsigned lower = 0;
    bool has_fixed = false;
    unsigned fixed = 0;
    for (const auto& o : os) {
      if (o.frozen()[i]) {
        if (has_fixed && fixed != o.base()[i]) return GeneralizedOrthant::empty(k);
        has_fixed = true;
        fixed = o.base()[i];
      } else {
        lower = std::max(lower, o.base()[i]);
      }
    }
    if (has_fixed) {
      if (fixed < lower) return GeneralizedOrthant::empty(k);
      s[i] = fixed;
      frozen[i] = true;
    } else {
      s[i] = lower;
    }
  }
  return GeneralizedOrthant(std::move(s), std::move(frozen));
}

SimpleSet orthant_complement(const GeneralizedOrthant& o) {
  const std::size_t k = o.dimension();
  if (o.is_empty()) return SimpleSet::everything(k);
  std::vector<GeneralizedOrthant> parts;
  for (std::size_t i = 0; i < k; ++i) {
    if (o.frozen()[i]) {
      Point u(k, 0);
      u[i] = o.base()[i] + 1;
      parts.push_back(GeneralizedOrthant::above(std::move(u)));
    }
    for (unsigned j = 0; j < o.base()[i]; ++j) {
      Point u(k, 0);
      u[i] = j;
      std::vector<bool> f(k, false);
      f[i] = true;
      parts.emplace_back(std::move(u), std::move(f));
    }
  }
  return SimpleSet(k, std::move(parts));
}

SimpleSet simple_union(const SimpleSet& s, const SimpleSet& t) {
  if (s.dimension() != t.dimension()) throw ArityError("simple_union: dimension mismatch");
  std::vector<GeneralizedOrthant> all = s.orthants();
  all.insert(all.end(), t.orthants().begin(), t.orthants().end());
  return SimpleSet(s.dimension(), std::move(all));
}

SimpleSet simple_intersect(const SimpleSet& s, const SimpleSet& t) {
  if (s.dimension() != t.dimension()) throw ArityError("simple_intersect: dimension mismatch");
  std::vector<GeneralizedOrthant> out;
  for (const auto& a : s.orthants())
    for (const auto& b : t.orthants()) {
      GeneralizedOrthant pair[] = {a, b};
      auto c = orthant_intersect(pair);
      if (!c.is_empty()) out.push_back(std::move(c));
    }
  return simplify(SimpleSet(s.dimension(), std::move(out)));
}

SimpleSet simple_complement(const SimpleSet& s) {
  SimpleSet acc = SimpleSet::everything(s.dimension());
  for (const auto& o : s.orthants()) {
    acc = simple_intersect(acc, orthant_complement(o));
    if (acc.is_empty()) break;
  }
  return acc;
}

SimpleSet simplify(const SimpleSet& s) {
  const auto& os = s.orthants();
  std::vector<GeneralizedOrthant> kept;
  for (std::size_t i = 0; i < os.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < os.size() && !redundant; ++j) {
      if (i == j || !os[j].includes(os[i])) continue;
      // Among equal orthants keep the first occurrence.
      redundant = !(os[i].includes(os[j]) && i < j);
    }
    if (!redundant) kept.push_back(os[i]);
  }
  return SimpleSet(s.dimension(), std::move(kept));
}

bool membership(const SimpleSet& s, std::span<const unsigned> x) {
  if (x.size() != s.dimension()) throw ArityError("membership: dimension mismatch");
  return std::any_of(s.orthants().begin(), s.orthants().end(),
                     [&](const GeneralizedOrthant& o) { return o.contains(x); });
}

MinimalElements minimal_elements(std::size_t k, const MembershipOracle& oracle, unsigned box) {
  const std::size_t side = static_cast<std::size_t>(box) + 2;
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= side;
  std::vector<char> member(total, 0);
  std::vector<Point> points(total);
  // Row-major: the last coordinate varies fastest.
  for (std::size_t idx = 0; idx < total; ++idx) {
    Point x(k);
    std::size_t r = idx;
    for (std::size_t i = k; i-- > 0;) {
      x[i] = static_cast<unsigned>(r % side);
      r /= side;
    }
    member[idx] = oracle(x) ? 1 : 0;
    points[idx] = std::move(x);
  }
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * side;

  MinimalElements out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Point& x = points[idx];
    if (!member[idx]) continue;
    if (std::any_of(x.begin(), x.end(), [&](unsigned v) { return v > box; })) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < k && minimal; ++i)
      if (x[i] > 0 && member[idx - stride[i]]) minimal = false;
    if (minimal) out.antichain.elements.push_back(x);
  }
  std::sort(out.antichain.elements.begin(), out.antichain.elements.end());

  out.complete = true;
  for (std::size_t idx = 0; idx < total && out.complete; ++idx) {
    const Point& y = points[idx];
    if (!member[idx] || std::none_of(y.begin(), y.end(), [&](unsigned v) { return v == box + 1; }))
      continue;
    bool dominated = std::any_of(out.antichain.elements.begin(), out.antichain.elements.end(),
                                 [&](const Point& a) {
                                   for (std::size_t i = 0; i < k; ++i)
                                     if (a[i] > y[i]) return false;
                                   return true;
                                 });
    if (!dominated) out.complete = false;
  }
  return out;
}

RationalGF gf_of_upper_ideal(std::size_t k, const Antichain& m, std::size_t cap) {
  if (m.elements.size() > cap)
    throw ResourceError("gf_of_upper_ideal: " + std::to_string(m.elements.size()) +
                        " generators exceed the inclusion-exclusion cap of " + std::to_string(cap));
  // Inclusion-exclusion folded one generator at a time:
  // 1_{U u O_a} = 1_U + 1_{O_a} - 1_{U n O_a}, and O_s n O_a = O_{max(s,a)}.
  std::map<Point, long long> coeff;
  for (const auto& a : m.elements) {
    if (a.size() != k) throw ArityError("gf_of_upper_ideal: generator dimension mismatch");
    std::map<Point, long long> next = coeff;
    for (const auto& [s, c] : coeff) {
      Point t(k);
      for (std::size_t i = 0; i < k; ++i) t[i] = std::max(s[i], a[i]);
      next[t] -= c;
    }
    next[a] += 1;
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    coeff = std::move(next);
  }
  std::vector<GFTerm> terms;
  for (const auto& [s, c] : coeff)
    terms.push_back({Scalar(c), s, std::vector<Scalar>(k, Scalar(1)), std::vector<unsigned>(k, 1)});
  return RationalGF(k, std::move(terms));
}

RationalGF gf_of_simple_set(const SimpleSet& s, std::size_t cap) {
  const std::size_t k = s.dimension();
  if (s.orthants().size() > cap)
    throw ResourceError("gf_of_simple_set: " + std::to_string(s.orthants().size()) +
                        " orthants exceed the inclusion-exclusion cap of " + std::to_string(cap));
  std::map<GeneralizedOrthant, long long> coeff;
  for (const auto& o : s.orthants()) {
    std::map<GeneralizedOrthant, long long> next = coeff;
    for (const auto& [q, c] : coeff) {
      GeneralizedOrthant pair[] = {q, o};
      auto meet = orthant_intersect(pair);
      if (!meet.is_empty()) next[meet] -= c;
    }
    next[o] += 1;
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    coeff = std::move(next);
  }
  std::vector<GFTerm> terms;
  for (const auto& [o, c] : coeff) {
    std::vector<unsigned> e(k);
    for (std::size_t i = 0; i < k; ++i) e[i] = o.frozen()[i] ? 0 : 1;
    terms.push_back({Scalar(c), o.base(), std::vector<Scalar>(k, Scalar(1)), std::move(e)});
  }
  return RationalGF(k, std::move(terms));
}

std::map<Point, Rational> numerator_over_full_denominator(const RationalGF& f) {
  const std::size_t k = f.arity();
  if (!f.is_untwisted_rational())
    throw UnsupportedError("numerator_over_full_denominator needs an untwisted rational series");
  std::map<Point, Rational> num;
  for (const auto& t : f.terms()) {
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < k; ++i) {
      if (t.e[i] > 1) throw UnsupportedError("denominator exponent above 1 is not an indicator series form");
      if (t.e[i] == 0) missing.push_back(i);
    }
    // x^b * prod_{i missing} (1 - x_i)
    const Rational g = *t.gamma.as_rational();
    for (std::size_t mask = 0; mask < (std::size_t{1} << missing.size()); ++mask) {
      Point s = t.b;
      int sign = 1;
      for (std::size_t j = 0; j < missing.size(); ++j)
        if (mask >> j & 1U) {
          s[missing[j]] += 1;
          sign = -sign;
        }
      num[s] += sign * g;
    }
  }
  std::erase_if(num, [](const auto& kv) { return kv.second == 0; });
  return num;
}

SimpleSet simple_set_from_numerator(std::size_t k, const std::map<Point, Rational>& numerator,
                                    std::size_t cell_cap) {
  std::vector<Point> support;
  std::vector<Rational> coeffs;
  for (const auto& [s, c] : numerator) {
    if (s.size() != k) throw ArityError("numerator monomial dimension mismatch");
    if (c == 0) continue;
    if (!is_integer(c)) throw NotASetError("non-integral numerator coefficient " + c.get_str());
    support.push_back(s);
    coeffs.push_back(c);
  }
  // The indicator at x is sum_{s <= x} c_s, which only depends on the cell
  // {s : s <= x}. Rounding each coordinate of x down to a breakpoint keeps the
  // cell, so breakpoint grid points represent every nonempty cell.
  std::vector<std::vector<unsigned>> breaks(k, std::vector<unsigned>{0});
  for (const auto& s : support)
    for (std::size_t i = 0; i < k; ++i) breaks[i].push_back(s[i]);
  std::size_t grid = 1;
  for (auto& b : breaks) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (grid > cell_cap / b.size()) throw ResourceError("simple_set_from_gf: cell enumeration exceeds cap");
    grid *= b.size();
  }

  std::set<std::vector<bool>> seen;
  std::vector<GeneralizedOrthant> result;
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t g = 0; g < grid; ++g) {
    Point x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = breaks[i][idx[i]];
    std::vector<bool> cell(support.size());
    Rational value = 0;
    for (std::size_t j = 0; j < support.size(); ++j) {
      bool le = true;
      for (std::size_t i = 0; i < k && le; ++i) le = support[j][i] <= x[i];
      cell[j] = le;
      if (le) value += coeffs[j];
    }
    if (value != 0 && value != 1) {
      std::string where;
      for (unsigned v : x) where += (where.empty() ? "" : ",") + std::to_string(v);
      throw NotASetError("series coefficient " + value.get_str() + " at (" + where + ") is not 0 or 1");
    }
    if (value == 1 && seen.insert(cell).second) {
      // Cell = (intersection of O_s, s in X) minus (union of O_s, s not in X).
      Point top(k, 0);
      for (std::size_t j = 0; j < support.size(); ++j)
        if (cell[j])
          for (std::size_t i = 0; i < k; ++i) top[i] = std::max(top[i], support[j][i]);
      SimpleSet piece(k, {GeneralizedOrthant::above(top)});
      for (std::size_t j = 0; j < support.size() && !piece.is_empty(); ++j)
        if (!cell[j]) piece = simple_intersect(piece, orthant_complement(GeneralizedOrthant::above(support[j])));
      result.insert(result.end(), piece.orthants().begin(), piece.orthants().end());
    }
    for (std::size_t i = k; i-- > 0;) {
      if (++idx[i] < breaks[i].size()) break;
      idx[i] = 0;
    }
  }
  return SimpleSet(k, std::move(result));
}

SimpleSet simple_set_from_gf(const RationalGF& f, std::size_t cell_cap) {
  return simple_set_from_numerator(f.arity(), numerator_over_full_denominator(f), cell_cap);
}

}  // namespace evpoly
