#include "evpoly/semigroups.hpp"

#include <algorithm>

#include "evpoly/errors.hpp"

namespace evpoly {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_size(const Element& a, std::size_t n, const std::string& who) {
  if (a.size() != n)
    throw PreconditionError(who + ": element " + element_to_string(a) + " should have " + std::to_string(n) +
                            " component(s)");
}

void require_range(const Element& a, std::int64_t lo, std::int64_t hi, const std::string& who) {
  require_size(a, 1, who);
  if (a[0] < lo || a[0] > hi)
    throw PreconditionError(who + ": element " + std::to_string(a[0]) + " outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
}

std::vector<Element> range_elements(std::int64_t n) {
  std::vector<Element> out;
  for (std::int64_t i = 0; i < n; ++i) out.push_back({i});
  return out;
}

}  // namespace

std::string element_to_string(const Element& a) {
  if (a.size() == 1) return std::to_string(a[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

void Semigroup::check_element(const Element& a) const { require_size(a, element_size(), describe()); }

IntegerLattice::IntegerLattice(std::size_t d) : d_(d) {
  if (d == 0) throw PreconditionError("Z^d needs d >= 1");
}

Element IntegerLattice::add(const Element& a, const Element& b) const {
  Element c(d_);
  for (std::size_t i = 0; i < d_; ++i) c[i] = a[i] + b[i];
  return c;
}

std::string IntegerLattice::describe() const { return d_ == 1 ? "Z" : "Z^" + std::to_string(d_); }

CyclicAdditive::CyclicAdditive(std::int64_t m) : m_(m) {
  if (m < 1) throw PreconditionError("Z/m needs m >= 1");
}

Element CyclicAdditive::add(const Element& a, const Element& b) const { return {mod(a[0] + b[0], m_)}; }
Element CyclicAdditive::canonical(const Element& a) const { return {mod(a.at(0), m_)}; }
std::optional<std::vector<Element>> CyclicAdditive::elements() const { return range_elements(m_); }
std::string CyclicAdditive::describe() const { return "(Z/" + std::to_string(m_) + ",+)"; }
void CyclicAdditive::check_element(const Element& a) const { require_size(a, 1, describe()); }

CyclicMultiplicative::CyclicMultiplicative(std::int64_t m) : m_(m) {
  if (m < 1 || m > (std::int64_t{1} << 31)) throw PreconditionError("(Z/m,*) needs 1 <= m <= 2^31");
}

Element CyclicMultiplicative::add(const Element& a, const Element& b) const {
  return {mod(mod(a[0], m_) * mod(b[0], m_), m_)};
}
Element CyclicMultiplicative::canonical(const Element& a) const { return {mod(a.at(0), m_)}; }
std::optional<std::vector<Element>> CyclicMultiplicative::elements() const { return range_elements(m_); }
std::string CyclicMultiplicative::describe() const { return "(Z/" + std::to_string(m_) + ",*)"; }
void CyclicMultiplicative::check_element(const Element& a) const { require_size(a, 1, describe()); }

TruncatedNaturals::TruncatedNaturals(std::int64_t cap) : cap_(cap) {
  if (cap < 0) throw PreconditionError("truncated naturals need cap >= 0");
}

Element TruncatedNaturals::add(const Element& a, const Element& b) const { return {std::min(a[0] + b[0], cap_)}; }
std::optional<std::vector<Element>> TruncatedNaturals::elements() const { return range_elements(cap_ + 1); }
std::string TruncatedNaturals::describe() const { return "N_" + std::to_string(cap_); }
void TruncatedNaturals::check_element(const Element& a) const { require_range(a, 0, cap_, describe()); }

CayleyTable::CayleyTable(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw PreconditionError("Cayley table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw PreconditionError("Cayley table is not square");
    for (std::size_t v : row)
      if (v >= n) throw PreconditionError("Cayley table entry " + std::to_string(v) + " out of range");
  }
}

Element CayleyTable::add(const Element& a, const Element& b) const {
  return {static_cast<std::int64_t>(table_[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])])};
}

std::optional<Element> CayleyTable::identity() const {
  const std::size_t n = table_.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool neutral = true;
    for (std::size_t x = 0; x < n && neutral; ++x) neutral = table_[e][x] == x && table_[x][e] == x;
    if (neutral) return Element{static_cast<std::int64_t>(e)};
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> CayleyTable::elements() const {
  return range_elements(static_cast<std::int64_t>(table_.size()));
}

std::string CayleyTable::describe() const { return "table(" + std::to_string(table_.size()) + ")"; }

void CayleyTable::check_element(const Element& a) const {
  require_range(a, 0, static_cast<std::int64_t>(table_.size()) - 1, describe());
}

std::optional<TableWitness> validate(const CayleyTable& g) {
  const auto& t = g.table();
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (t[a][b] != t[b][a]) return TableWitness{TableWitness::Kind::kCommutativity, {a, b}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return TableWitness{TableWitness::Kind::kAssociativity, {a, b, c}};
  return std::nullopt;
}

ElementSet sumset(const ElementSet& a, const ElementSet& b, const Semigroup& g) {
  ElementSet out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(g.canonical(g.add(x, y)));
  return out;
}

ElementSet n_fold_sumset(const ElementSet& a, unsigned n, const Semigroup& g) {
  ElementSet base;
  for (const auto& x : a) {
    g.check_element(x);
    base.insert(g.canonical(x));
  }
  if (n == 0) {
    auto e = g.identity();
    if (!e) throw PreconditionError("0*A needs a neutral element; " + g.describe() + " has none");
    return {g.canonical(*e)};
  }
  ElementSet s = base;
  for (unsigned j = 1; j < n; ++j) s = sumset(s, base, g);
  return s;
}

ElementSet multi_sumset(const std::vector<ElementSet>& sets, const std::vector<unsigned>& n, const Semigroup& g) {
  if (sets.size() != n.size()) throw ArityError("multi_sumset: one multiplicity per set expected");
  if (sets.empty()) throw PreconditionError("multi_sumset needs at least one set");
  std::optional<ElementSet> acc;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (n[i] == 0 && acc) continue;  // adding 0*A is adding the identity
    ElementSet part = n_fold_sumset(sets[i], n[i], g);
    acc = acc ? sumset(*acc, part, g) : std::move(part);
  }
  return *acc;
}

Scalar Character::value(const Element& a) const {
  return Scalar::root_of_unity(order_, static_cast<long long>(exponent(a)));
}

LinearCharacter::LinearCharacter(unsigned order, std::vector<std::int64_t> weights)
    : Character(order), weights_(std::move(weights)) {
  if (order == 0) throw PreconditionError("character order must be positive");
}

unsigned LinearCharacter::exponent(const Element& a) const {
  if (a.size() != weights_.size())
    throw PreconditionError("character undefined at " + element_to_string(a) + ": arity mismatch");
  const auto m = static_cast<std::int64_t>(order());
  std::int64_t e = 0;
  for (std::size_t i = 0; i < a.size(); ++i) e = mod(e + mod(weights_[i], m) * mod(a[i], m), m);
  return static_cast<unsigned>(e);
}

TableCharacter::TableCharacter(unsigned order, std::vector<unsigned> exponents)
    : Character(order), exponents_(std::move(exponents)) {
  if (order == 0) throw PreconditionError("character order must be positive");
  for (auto& e : exponents_) e %= order;
}

unsigned TableCharacter::exponent(const Element& a) const {
  if (a.size() != 1 || a[0] < 0 || static_cast<std::size_t>(a[0]) >= exponents_.size())
    throw PreconditionError("character undefined at " + element_to_string(a));
  return exponents_[static_cast<std::size_t>(a[0])];
}

std::optional<std::pair<Element, Element>> validate_character(const Semigroup& g, const Character& psi,
                                                              const std::vector<Element>& sample) {
  const unsigned m = psi.order();
  for (const auto& a : sample)
    for (const auto& b : sample) {
      unsigned lhs = psi.exponent(g.canonical(g.add(a, b)));
      unsigned rhs = (psi.exponent(a) + psi.exponent(b)) % m;
      if (lhs != rhs) return std::make_pair(a, b);
    }
  return std::nullopt;
}

Scalar character_sum(const ElementSet& s, const Character& psi) {
  // Count exponents first so the field arithmetic is one pass over Z/m.
  std::vector<long long> count(psi.order(), 0);
  for (const auto& a : s) ++count[psi.exponent(a)];
  Scalar total = Scalar::root_of_unity(psi.order(), 0) * Scalar(0);
  for (unsigned t = 0; t < psi.order(); ++t)
    if (count[t]) total += Scalar(count[t]) * Scalar::root_of_unity(psi.order(), t);
  return total;
}

}  // namespace evpoly
