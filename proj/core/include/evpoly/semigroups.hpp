#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evpoly/cyclotomic.hpp"

namespace evpoly {

/// Semigroup elements are integer tuples; each instance fixes their length
/// and a canonical form so that equal elements compare equal.
using Element = std::vector<std::int64_t>;
using ElementSet = std::set<Element>;

/// A commutative semigroup. Implementations are immutable.
class Semigroup {
 public:
  virtual ~Semigroup() = default;

  virtual Element add(const Element& a, const Element& b) const = 0;
  virtual Element canonical(const Element& a) const { return a; }
  /// The neutral element, if the instance is a monoid.
  virtual std::optional<Element> identity() const = 0;
  /// Length of the element tuples.
  virtual std::size_t element_size() const = 0;
  /// Every element, for finite instances.
  virtual std::optional<std::vector<Element>> elements() const { return std::nullopt; }
  virtual std::string describe() const = 0;

  /// Throws PreconditionError unless a has the right shape and range.
  virtual void check_element(const Element& a) const;
};

/// (Z^d, +).
class IntegerLattice final : public Semigroup {
 public:
  explicit IntegerLattice(std::size_t d);
  Element add(const Element& a, const Element& b) const override;
  std::optional<Element> identity() const override { return Element(d_, 0); }
  std::size_t element_size() const override { return d_; }
  std::string describe() const override;

 private:
  std::size_t d_;
};

/// (Z/m, +), residues 0..m-1.
class CyclicAdditive final : public Semigroup {
 public:
  explicit CyclicAdditive(std::int64_t m);
  Element add(const Element& a, const Element& b) const override;
  Element canonical(const Element& a) const override;
  std::optional<Element> identity() const override { return Element{0}; }
  std::size_t element_size() const override { return 1; }
  std::optional<std::vector<Element>> elements() const override;
  std::string describe() const override;
  void check_element(const Element& a) const override;
  std::int64_t modulus() const { return m_; }

 private:
  std::int64_t m_;
};

/// (Z/m, *), residues 0..m-1.
class CyclicMultiplicative final : public Semigroup {
 public:
  explicit CyclicMultiplicative(std::int64_t m);
  Element add(const Element& a, const Element& b) const override;
  Element canonical(const Element& a) const override;
  std::optional<Element> identity() const override { return Element{1 % m_}; }
  std::size_t element_size() const override { return 1; }
  std::optional<std::vector<Element>> elements() const override;
  std::string describe() const override;
  void check_element(const Element& a) const override;

 private:
  std::int64_t m_;
};

/// {0, ..., cap} with a + b = min(a + b, cap).
class TruncatedNaturals final : public Semigroup {
 public:
  explicit TruncatedNaturals(std::int64_t cap);
  Element add(const Element& a, const Element& b) const override;
  std::optional<Element> identity() const override { return Element{0}; }
  std::size_t element_size() const override { return 1; }
  std::optional<std::vector<Element>> elements() const override;
  std::string describe() const override;
  void check_element(const Element& a) const override;

 private:
  std::int64_t cap_;
};

/// Finite semigroup on {0..N-1} given by its operation table. The table is
/// only checked for shape here; use validate() for the axioms.
class CayleyTable final : public Semigroup {
 public:
  explicit CayleyTable(std::vector<std::vector<std::size_t>> table);
  Element add(const Element& a, const Element& b) const override;
  std::optional<Element> identity() const override;
  std::size_t element_size() const override { return 1; }
  std::optional<std::vector<Element>> elements() const override;
  std::string describe() const override;
  void check_element(const Element& a) const override;

  std::size_t size() const { return table_.size(); }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
};

struct TableWitness {
  enum class Kind { kCommutativity, kAssociativity };
  Kind kind;
  /// (a, b) for commutativity, (a, b, c) for associativity.
  std::vector<std::size_t> elements;
};

/// First violation found scanning pairs, then triples, in increasing order.
std::optional<TableWitness> validate(const CayleyTable& table);

ElementSet sumset(const ElementSet& a, const ElementSet& b, const Semigroup& g);
/// n*A; n = 0 gives {identity} and needs a monoid.
ElementSet n_fold_sumset(const ElementSet& a, unsigned n, const Semigroup& g);
ElementSet multi_sumset(const std::vector<ElementSet>& sets, const std::vector<unsigned>& n,
                        const Semigroup& g);

/// A character with values in the m-th roots of unity, given by exponents.
class Character {
 public:
  explicit Character(unsigned order) : order_(order) {}
  virtual ~Character() = default;

  unsigned order() const { return order_; }
  /// psi(a) = zeta_m^exponent(a), exponent in [0, m).
  virtual unsigned exponent(const Element& a) const = 0;
  Scalar value(const Element& a) const;

 private:
  unsigned order_;
};

/// psi(a) = zeta_m^{<w, a>} on Z^d or Z/q (elements as residues).
class LinearCharacter final : public Character {
 public:
  LinearCharacter(unsigned order, std::vector<std::int64_t> weights);
  unsigned exponent(const Element& a) const override;
  const std::vector<std::int64_t>& weights() const { return weights_; }

 private:
  std::vector<std::int64_t> weights_;
};

/// Exponents listed per element of a finite instance {0..N-1}.
class TableCharacter final : public Character {
 public:
  TableCharacter(unsigned order, std::vector<unsigned> exponents);
  unsigned exponent(const Element& a) const override;

 private:
  std::vector<unsigned> exponents_;
};

/// First pair (a, b) among `sample` with psi(a+b) != psi(a) psi(b). For finite
/// instances pass g.elements() to check exhaustively.
std::optional<std::pair<Element, Element>> validate_character(const Semigroup& g, const Character& psi,
                                                              const std::vector<Element>& sample);

/// sum of psi over s, in Q(zeta_m).
Scalar character_sum(const ElementSet& s, const Character& psi);

std::string element_to_string(const Element& a);

}  // namespace evpoly
