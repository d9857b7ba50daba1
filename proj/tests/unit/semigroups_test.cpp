#include <evpoly/errors.hpp>
#include <evpoly/semigroups.hpp>
#include <gtest/gtest.h>

#include <memory>

#include "generators.hpp"
#include "oracles.hpp"

using namespace evpoly;

namespace {

ElementSet ints(std::initializer_list<std::int64_t> v) {
  ElementSet s;
  for (auto x : v) s.insert(Element{x});
  return s;
}

std::vector<std::shared_ptr<const Semigroup>> shipped() {
  return {std::make_shared<IntegerLattice>(1), std::make_shared<IntegerLattice>(2),
          std::make_shared<CyclicAdditive>(6), std::make_shared<CyclicMultiplicative>(10),
          std::make_shared<TruncatedNaturals>(5)};
}

// A few small elements of each shipped instance.
std::vector<Element> sample(const Semigroup& g) {
  if (auto all = g.elements()) return *all;
  std::vector<Element> out;
  if (g.element_size() == 1)
    for (std::int64_t v = -3; v <= 4; ++v) out.push_back({v});
  else
    for (std::int64_t a = -2; a <= 2; ++a)
      for (std::int64_t b = -1; b <= 2; ++b) out.push_back({a, b});
  return out;
}

}  // namespace

TEST(Semigroups, TableValidation) {
  CayleyTable z3({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_FALSE(validate(z3).has_value());
  EXPECT_EQ(z3.identity(), Element{0});
  CayleyTable bad({{0, 0}, {1, 1}});
  auto w = validate(bad);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->kind, TableWitness::Kind::kCommutativity);
  EXPECT_EQ(w->elements, (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(CayleyTable({{0, 1}, {1}}), PreconditionError);
  EXPECT_THROW(CayleyTable({{0, 2}, {2, 0}}), PreconditionError);
}

TEST(SemigroupsProperty, RandomMagmaAgainstTripleScan) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a; b < 4; ++b) t[a][b] = t[b][a] = static_cast<std::size_t>(gen::uniform(rng, 0, 3));
    if (trial % 5 == 0) t[0][3] = (t[3][0] + 1) % 4;
    bool commutative = true, associative = true;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        commutative = commutative && t[a][b] == t[b][a];
        for (std::size_t c = 0; c < 4; ++c) associative = associative && t[t[a][b]][c] == t[a][t[b][c]];
      }
    auto w = validate(CayleyTable(t));
    ASSERT_EQ(!w.has_value(), commutative && associative);
    if (w && w->kind == TableWitness::Kind::kAssociativity) {
      auto& e = w->elements;
      ASSERT_TRUE(commutative);
      ASSERT_NE(t[t[e[0]][e[1]]][e[2]], t[e[0]][t[e[1]][e[2]]]);
    }
  }
}

TEST(Semigroups, SumsetExamples) {
  IntegerLattice z(1);
  EXPECT_EQ(sumset(ints({0}), ints({4, 7}), z), ints({4, 7}));
  EXPECT_EQ(sumset(ints({0, 1}), ints({0, 1}), z), ints({0, 1, 2}));
  EXPECT_EQ(sumset(ints({0, 2, 3}), ints({0, 2, 3}), z), ints({0, 2, 3, 4, 5, 6}));
  EXPECT_EQ(n_fold_sumset(ints({3, 5}), 1, z), ints({3, 5}));
  EXPECT_EQ(n_fold_sumset(ints({0, 1}), 7, z).size(), 8u);
  EXPECT_EQ(n_fold_sumset(ints({0, 2, 3}), 4, z).size(), 12u);
  EXPECT_EQ(n_fold_sumset(ints({0, 2, 3}), 0, z), ints({0}));
  EXPECT_EQ(multi_sumset({ints({0, 1}), ints({0, 2})}, {3, 2}, z), ints({0, 1, 2, 3, 4, 5, 6, 7}));
  auto evens = multi_sumset({ints({0, 1}), ints({0, 2})}, {0, 3}, z);
  EXPECT_EQ(evens, ints({0, 2, 4, 6}));
}

TEST(Semigroups, ZeroFoldNeedsIdentity) {
  // max on {0,1,2} has 0 as neutral element; the constant table has none.
  CayleyTable m({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
  EXPECT_TRUE(m.identity().has_value());
  CayleyTable nz({{1, 1}, {1, 1}});
  EXPECT_FALSE(nz.identity().has_value());
  EXPECT_THROW(n_fold_sumset(ints({0}), 0, nz), PreconditionError);
}

TEST(Semigroups, InstanceFormulas) {
  std::mt19937 rng(5);
  CyclicAdditive za(7);
  CyclicMultiplicative zm(9);
  TruncatedNaturals tn(4);
  IntegerLattice z2(2);
  for (int t = 0; t < 100; ++t) {
    std::int64_t a = gen::uniform(rng, 0, 6), b = gen::uniform(rng, 0, 6);
    EXPECT_EQ(za.add({a}, {b}), Element{(a + b) % 7});
    std::int64_t c = gen::uniform(rng, 0, 8), d = gen::uniform(rng, 0, 8);
    EXPECT_EQ(zm.add({c}, {d}), Element{(c * d) % 9});
    std::int64_t e = gen::uniform(rng, 0, 4), f = gen::uniform(rng, 0, 4);
    EXPECT_EQ(tn.add({e}, {f}), Element{std::min<std::int64_t>(e + f, 4)});
    std::int64_t x = gen::uniform(rng, -9, 9), y = gen::uniform(rng, -9, 9);
    EXPECT_EQ(z2.add({x, y}, {y, x}), (Element{x + y, x + y}));
  }
  EXPECT_NO_THROW(za.check_element({7}));
  EXPECT_EQ(za.canonical({7}), Element{0});
  EXPECT_THROW(tn.check_element({5}), PreconditionError);
  EXPECT_THROW(z2.check_element({1}), PreconditionError);
}

TEST(SemigroupsProperty, AxiomsOnSampledTriples) {
  for (const auto& g : shipped()) {
    auto s = sample(*g);
    for (const auto& a : s)
      for (const auto& b : s) {
        ASSERT_EQ(g->add(a, b), g->add(b, a)) << g->describe();
        for (std::size_t i = 0; i < s.size(); i += 3) {
          const auto& c = s[i];
          ASSERT_EQ(g->add(g->add(a, b), c), g->add(a, g->add(b, c))) << g->describe();
        }
      }
  }
}

TEST(SemigroupsProperty, FoldSumsetSplits) {
  for (const auto& g : shipped()) {
    auto s = sample(*g);
    ElementSet a;
    for (std::size_t i = 0; i < s.size() && a.size() < 3; i += 2) a.insert(s[i]);
    for (unsigned m = 0; m <= 6; ++m)
      for (unsigned n = 0; n <= 6 - m; ++n) {
        ASSERT_EQ(n_fold_sumset(a, m + n, *g), sumset(n_fold_sumset(a, m, *g), n_fold_sumset(a, n, *g), *g))
            << g->describe() << " m=" << m << " n=" << n;
      }
  }
}

TEST(SemigroupsProperty, GrowthIsMonotoneWhenZeroIsASummand) {
  for (const auto& g : shipped()) {
    auto s = sample(*g);
    ElementSet a{*g->identity(), s[1 % s.size()], s[s.size() / 2]};
    std::size_t last = 0;
    for (unsigned n = 0; n <= 12; ++n) {
      std::size_t size = n_fold_sumset(a, n, *g).size();
      ASSERT_GE(size, last) << g->describe();
      last = size;
    }
  }
}

TEST(SemigroupsProperty, FoldSumsetMatchesTupleEnumeration) {
  IntegerLattice z(1);
  std::vector<Element> a{{0}, {2}, {3}};
  for (unsigned n = 0; n <= 7; ++n)
    EXPECT_EQ(n_fold_sumset(ElementSet(a.begin(), a.end()), n, z), oracle::tuple_sumset({a}, {n}, z));
}

TEST(Characters, Sums) {
  IntegerLattice z(1);
  LinearCharacter trivial(1, {0});
  EXPECT_EQ(character_sum(ints({0, 4, 9}), trivial), Scalar(3));
  LinearCharacter sign(2, {1});
  EXPECT_EQ(character_sum(ints({0, 1, 2}), sign), Scalar(1));
  EXPECT_EQ(character_sum(n_fold_sumset(ints({0, 1}), 4, z), sign), Scalar(1));
  EXPECT_EQ(character_sum(n_fold_sumset(ints({0, 1}), 5, z), sign), Scalar(0));
  EXPECT_EQ(sign.value({-3}), Scalar(-1));
}

TEST(Characters, Validation) {
  CyclicAdditive z4(4);
  LinearCharacter good(4, {1});
  EXPECT_FALSE(validate_character(z4, good, *z4.elements()).has_value());
  LinearCharacter bad(3, {1});  // does not descend to Z/4
  EXPECT_TRUE(validate_character(z4, bad, *z4.elements()).has_value());
  TableCharacter table(2, {0, 1, 0, 1});
  EXPECT_FALSE(validate_character(z4, table, *z4.elements()).has_value());
  TableCharacter broken(2, {0, 1, 1, 1});
  auto w = validate_character(z4, broken, *z4.elements());
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(broken.value(z4.add(w->first, w->second)), broken.value(w->first) * broken.value(w->second));
}

TEST(CharactersProperty, MultiplicativeOnFiniteInstances) {
  for (std::int64_t m : {2, 3, 5, 6, 8}) {
    CyclicAdditive g(m);
    for (std::int64_t w = 0; w < m; ++w) {
      LinearCharacter psi(static_cast<unsigned>(m), {w});
      auto all = *g.elements();
      for (const auto& a : all)
        for (const auto& b : all) ASSERT_EQ(psi.value(g.add(a, b)), psi.value(a) * psi.value(b));
    }
  }
}
