#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "evpoly/rational_gf.hpp"

namespace evpoly {

/// A point of N_0^k.
using Point = std::vector<unsigned>;

/// O_{s,I} = { x : x_i = s_i for i in I, x_i >= s_i otherwise }, or the
/// empty set.
class GeneralizedOrthant {
 public:
  static GeneralizedOrthant empty(std::size_t k);
  /// The full-dimensional orthant above s (I = {}).
  static GeneralizedOrthant above(Point s);
  GeneralizedOrthant(Point s, std::vector<bool> frozen);

  std::size_t dimension() const { return k_; }
  bool is_empty() const { return empty_; }
  const Point& base() const { return s_; }
  const std::vector<bool>& frozen() const { return frozen_; }

  bool contains(std::span<const unsigned> x) const;
  /// Set inclusion: other is a subset of *this.
  bool includes(const GeneralizedOrthant& other) const;

  friend bool operator==(const GeneralizedOrthant&, const GeneralizedOrthant&) = default;
  friend bool operator<(const GeneralizedOrthant& a, const GeneralizedOrthant& b) {
    if (a.empty_ != b.empty_) return a.empty_;
    if (a.s_ != b.s_) return a.s_ < b.s_;
    return a.frozen_ < b.frozen_;
  }

 private:
  explicit GeneralizedOrthant(std::size_t k) : k_(k), empty_(true) {}

  std::size_t k_;
  bool empty_ = false;
  Point s_;
  std::vector<bool> frozen_;
};

/// Finite union of generalized orthants. Empty members are dropped; the
/// representation is not canonical.
class SimpleSet {
 public:
  explicit SimpleSet(std::size_t k) : k_(k) {}
  SimpleSet(std::size_t k, std::vector<GeneralizedOrthant> orthants);

  static SimpleSet everything(std::size_t k);

  std::size_t dimension() const { return k_; }
  const std::vector<GeneralizedOrthant>& orthants() const { return orthants_; }
  bool is_empty() const { return orthants_.empty(); }

 private:
  std::size_t k_;
  std::vector<GeneralizedOrthant> orthants_;
};

/// Pairwise incomparable points, kept sorted.
struct Antichain {
  std::vector<Point> elements;
  friend bool operator==(const Antichain&, const Antichain&) = default;
};

bool is_antichain(const std::vector<Point>& points);

GeneralizedOrthant orthant_intersect(std::span<const GeneralizedOrthant> os);
SimpleSet orthant_complement(const GeneralizedOrthant& o);

SimpleSet simple_union(const SimpleSet& s, const SimpleSet& t);
SimpleSet simple_intersect(const SimpleSet& s, const SimpleSet& t);
SimpleSet simple_complement(const SimpleSet& s);
/// Drops orthants contained in another member (keeps the first of equals).
SimpleSet simplify(const SimpleSet& s);

bool membership(const SimpleSet& s, std::span<const unsigned> x);

using MembershipOracle = std::function<bool(std::span<const unsigned>)>;

struct MinimalElements {
  Antichain antichain;
  /// No member of the shell of [0, N+1]^k escapes domination by the
  /// antichain. A heuristic: minimal elements beyond N+1 go unnoticed.
  bool complete = false;
};

/// Minimal elements inside [0, box]^k of an upper ideal given by its
/// (monotone) membership predicate.
MinimalElements minimal_elements(std::size_t k, const MembershipOracle& oracle, unsigned box);

inline constexpr std::size_t kDefaultOrthantCap = 20;
inline constexpr std::size_t kDefaultCellCap = std::size_t{1} << 20;

/// Indicator series of the upper ideal generated by m, as
/// sum +-x^s / prod (1 - x_i) over componentwise maxima of subsets.
RationalGF gf_of_upper_ideal(std::size_t k, const Antichain& m, std::size_t cap = kDefaultOrthantCap);

/// Indicator series of a simple set by inclusion-exclusion over its orthants.
RationalGF gf_of_simple_set(const SimpleSet& s, std::size_t cap = kDefaultOrthantCap);

/// r(x) such that F = r / prod (1 - x_i), for a series whose denominators
/// are untwisted with exponents 0 or 1. Coefficients must be integers.
std::map<Point, Rational> numerator_over_full_denominator(const RationalGF& f);

/// Recovers the simple set whose indicator series is
/// sum_s c_s x^s / prod (1 - x_i). Throws NotASetError when some coefficient
/// of the series lies outside {0, 1}.
SimpleSet simple_set_from_numerator(std::size_t k, const std::map<Point, Rational>& numerator,
                                    std::size_t cell_cap = kDefaultCellCap);
SimpleSet simple_set_from_gf(const RationalGF& f, std::size_t cell_cap = kDefaultCellCap);

}  // namespace evpoly
