#include <evpoly/colorings.hpp>
#include <evpoly/errors.hpp>
#include <gtest/gtest.h>

#include <memory>

#include "generators.hpp"
#include "oracles.hpp"

using namespace evpoly;

namespace {

std::shared_ptr<const Semigroup> Z() { return std::make_shared<IntegerLattice>(1); }

AssociatedColoring assoc(std::shared_ptr<const Semigroup> g, std::vector<std::int64_t> gens) {
  std::vector<Element> e;
  for (auto v : gens) e.push_back({v});
  return AssociatedColoring(std::move(g), std::move(e));
}

std::vector<Element> ints(std::initializer_list<std::int64_t> v) {
  std::vector<Element> s;
  for (auto x : v) s.push_back(Element{x});
  return s;
}

// Injective explicit coloring on [0, bound]^k: every point its own label.
ExplicitColoring injective(std::size_t k, unsigned bound) {
  std::vector<Color> table;
  std::int64_t next = 0;
  oracle::for_box(k, bound, [&](const Point&) { table.push_back({next++}); });
  return ExplicitColoring(k, bound, std::move(table));
}

}  // namespace

TEST(Colorings, AssociatedColor) {
  auto chi = assoc(Z(), {1, 2});
  EXPECT_EQ(chi.color(std::vector<unsigned>{3, 1}), Color{5});
  EXPECT_EQ(chi.color(std::vector<unsigned>{0, 0}), Color{0});
  auto z4 = std::make_shared<CyclicAdditive>(4);
  auto t = assoc(z4, {1, 3});
  oracle::for_box(2, 5, [&](const Point& v) { EXPECT_EQ(t.color(v), Color{(v[0] + 3 * v[1]) % 4}); });
  auto mul = assoc(std::make_shared<CyclicMultiplicative>(7), {3});
  std::int64_t p = 1;
  for (unsigned n = 0; n <= 12; ++n, p = p * 3 % 7) EXPECT_EQ(mul.color(std::vector<unsigned>{n}), Color{p});
}

TEST(Colorings, ExplicitColoringDomain) {
  auto chi = injective(2, 3);
  EXPECT_THROW(chi.color(std::vector<unsigned>{4, 0}), PreconditionError);
  EXPECT_THROW(ExplicitColoring(1, 3, {{0}, {1}}), PreconditionError);
  EXPECT_EQ(chi.color(std::vector<unsigned>{1, 2}), Color{6});
}

TEST(Colorings, ShiftStabilityExamples) {
  EXPECT_FALSE(check_shift_stability(injective(2, 6), 3).has_value());
  std::vector<Color> parity;
  oracle::for_box(2, 6, [&](const Point& v) { parity.push_back({v[0] % 2}); });
  ExplicitColoring par(2, 6, parity);
  EXPECT_TRUE(par.known_additive());
  ExplicitColoring abaa(1, 3, {{0}, {1}, {0}, {0}});
  ASSERT_TRUE(abaa.shift_witness().has_value());
  EXPECT_EQ(abaa.shift_witness()->a, Point{0});
  EXPECT_EQ(abaa.shift_witness()->c, Point{2});
  EXPECT_EQ(abaa.shift_witness()->b, Point{1});
  EXPECT_FALSE(abaa.known_additive());
  EXPECT_THROW(substantial_upper_ideal(abaa, single_block(1), 3), PreconditionError);
}

TEST(Colorings, BlockNormAndSlices) {
  BlockPartition p{{0, 2}, {1}};
  EXPECT_EQ(block_norm(std::vector<unsigned>{2, 5, 1}, p), (std::vector<unsigned>{3, 5}));
  EXPECT_EQ(block_norm(std::vector<unsigned>{2, 5, 1}, singleton_blocks(3)), (std::vector<unsigned>{2, 5, 1}));
  EXPECT_EQ(block_norm(std::vector<unsigned>{2, 5, 1}, single_block(3)), std::vector<unsigned>{8});
  EXPECT_EQ(slice_points(2, single_block(2), std::vector<unsigned>{2}), (std::vector<Point>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_THROW(block_norm(std::vector<unsigned>{1, 1}, BlockPartition{{0}}), PreconditionError);
}

TEST(Colorings, SubstantialPointsExamples) {
  auto ones = assoc(Z(), {1, 1});
  auto onetwo = assoc(Z(), {1, 2});
  for (unsigned n = 0; n <= 8; ++n) {
    std::vector<unsigned> slice{n};
    EXPECT_EQ(substantial_points(ones, single_block(2), slice), (std::vector<Point>{{0, n}}));
    EXPECT_EQ(substantial_points(onetwo, single_block(2), slice).size(), n + 1);
  }
  auto inj = injective(2, 6);
  EXPECT_EQ(substantial_points(inj, single_block(2), std::vector<unsigned>{4}).size(), 5u);
}

TEST(Colorings, SubstantialUpperIdealExamples) {
  auto rep = substantial_upper_ideal(assoc(Z(), {1, 1}), single_block(2), 8);
  EXPECT_EQ(rep.minimal_non_substantial.elements, (std::vector<Point>{{1, 0}}));
  EXPECT_TRUE(rep.complete);
  EXPECT_EQ(rep.substantial.size(), 9u);

  auto inj = substantial_upper_ideal(injective(2, 6), single_block(2), 2);
  EXPECT_TRUE(inj.minimal_non_substantial.elements.empty());
  EXPECT_TRUE(inj.complete);
  EXPECT_THROW(substantial_upper_ideal(injective(2, 6), single_block(2), 3), PreconditionError);

  // One coordinate: every slice is a single point, hence substantial.
  auto trunc = substantial_upper_ideal(assoc(std::make_shared<TruncatedNaturals>(3), {1}), single_block(1), 8);
  EXPECT_EQ(trunc.substantial.size(), 9u);
  EXPECT_TRUE(trunc.minimal_non_substantial.elements.empty());

  auto trunc2 = substantial_upper_ideal(assoc(std::make_shared<TruncatedNaturals>(3), {1, 1}), single_block(2), 8);
  EXPECT_EQ(trunc2.minimal_non_substantial.elements, (std::vector<Point>{{1, 0}}));
}

TEST(ColoringsProperty, SubstantialCountEqualsSliceColors) {
  std::mt19937 rng(21);
  std::vector<std::shared_ptr<const Semigroup>> gs{Z(), std::make_shared<CyclicAdditive>(5),
                                                   std::make_shared<CyclicMultiplicative>(6),
                                                   std::make_shared<TruncatedNaturals>(4)};
  for (int trial = 0; trial < 24; ++trial) {
    const auto& g = gs[static_cast<std::size_t>(trial) % gs.size()];
    std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    std::vector<std::int64_t> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(gen::uniform(rng, 0, 4));
    auto chi = assoc(g, gens);
    auto parts = gen::all_partitions(k);
    const auto& p = parts[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(parts.size()) - 1))];
    oracle::for_box(p.size(), 4, [&](const Point& n) {
      std::set<Color> colors;
      oracle::for_box(k, 4, [&](const Point& x) {
        if (block_norm(x, p) == n) colors.insert(chi.color(x));
      });
      auto sub = substantial_points(chi, p, n);
      ASSERT_EQ(sub.size(), colors.size());
      for (const auto& x : sub) {
        // x is lex-least among points of its slice and color.
        oracle::for_box(k, 4, [&](const Point& y) {
          if (block_norm(y, p) == n && chi.color(y) == chi.color(x)) ASSERT_FALSE(y < x);
        });
      }
    });
    EXPECT_NO_THROW(substantial_upper_ideal(chi, p, 5));
  }
}

TEST(ColoringsProperty, ShiftStableTablesAreAdditive) {
  std::mt19937 rng(22);
  int passing = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Color> table;
    if (trial % 2 == 0) {
      std::int64_t m = gen::uniform(rng, 2, 5), a = gen::uniform(rng, 0, 4), b = gen::uniform(rng, 0, 4);
      oracle::for_box(2, 6, [&](const Point& v) { table.push_back({(a * v[0] + b * v[1]) % m}); });
    } else {
      oracle::for_box(2, 6, [&](const Point&) { table.push_back({gen::uniform(rng, 0, 1)}); });
    }
    ExplicitColoring chi(2, 6, table);
    if (!chi.known_additive()) continue;
    ++passing;
    oracle::for_box(2, 3, [&](const Point& a) {
      oracle::for_box(2, 3, [&](const Point& c) {
        if (chi.color(a) != chi.color(c)) return;
        oracle::for_box(2, 3, [&](const Point& b) {
          oracle::for_box(2, 3, [&](const Point& d) {
            if (chi.color(b) != chi.color(d)) return;
            Point ab{a[0] + b[0], a[1] + b[1]}, cd{c[0] + d[0], c[1] + d[1]};
            ASSERT_EQ(chi.color(ab), chi.color(cd));
          });
        });
      });
    });
  }
  EXPECT_GE(passing, 20);
}

TEST(Colorings, SumsetGrowthSingleGenerator) {
  auto rep = sumset_growth_sep({ints({0, 1})}, Z());
  ASSERT_EQ(rep.status, PipelineStatus::kOk);
  EXPECT_EQ(format_polynomial(rep.sep->table.at({kInfinity})), "1 + n");
  auto single = sumset_growth_sep({ints({7})}, Z());
  ASSERT_TRUE(single.sep.has_value());
  for (const auto& [w, p] : single.sep->table) EXPECT_EQ(p, PolynomialQ::constant(1, 1));
}

TEST(Colorings, SumsetGrowthTwoSets) {
  auto rep = sumset_growth_sep({ints({0, 1}), ints({0, 2})}, Z());
  ASSERT_EQ(rep.status, PipelineStatus::kOk);
  const auto& t = rep.sep->table;
  EXPECT_EQ(format_polynomial(t.at({kInfinity, kInfinity})), "1 + n1 + 2 n2");
  EXPECT_EQ(format_polynomial(t.at({0, kInfinity})), "1 + n2");
  EXPECT_EQ(format_polynomial(t.at({kInfinity, 0})), "1 + n1");
  EXPECT_TRUE(rep.verification.ok());
  EXPECT_GT(rep.verification.checked, 0u);
}

TEST(Colorings, SumsetGrowthInconclusiveWhenBoxTooSmall) {
  GrowthOptions o;
  o.max_box = 4;
  auto rep = sumset_growth_sep({ints({0, 1}), ints({0, 2})}, Z(), o);
  EXPECT_EQ(rep.status, PipelineStatus::kInconclusive);
  EXPECT_FALSE(rep.sep.has_value());
}

TEST(Colorings, SumsetGrowthMatchesEnumerationOnFiniteMonoids) {
  std::vector<std::pair<std::shared_ptr<const Semigroup>, std::vector<std::vector<Element>>>> cases{
      {std::make_shared<CyclicAdditive>(7), {ints({0, 3})}},
      {std::make_shared<TruncatedNaturals>(5), {ints({0, 2}), ints({1})}},
      {std::make_shared<CyclicMultiplicative>(8), {ints({1, 3, 5})}},
      {Z(), {ints({0, 2, 3})}}};
  for (const auto& [g, sets] : cases) {
    auto rep = sumset_growth_sep(sets, g);
    ASSERT_EQ(rep.status, PipelineStatus::kOk) << g->describe();
    for (const auto& n : box_grid(sets.size(), 0, 6)) {
      std::vector<unsigned> m(n.begin(), n.end());
      EXPECT_EQ(rep.sep->evaluate(n), Rational(static_cast<long>(oracle::tuple_sumset(sets, m, *g).size())))
          << g->describe();
    }
  }
}

TEST(Colorings, SumsetGrowthStableUnderLargerBoxes) {
  GrowthOptions wide;
  wide.start_box = 4;
  wide.max_box = 16;
  auto a = sumset_growth_sep({ints({0, 1}), ints({0, 2})}, Z());
  auto b = sumset_growth_sep({ints({0, 1}), ints({0, 2})}, Z(), wide);
  ASSERT_TRUE(a.sep && b.sep);
  for (const auto& n : box_grid(2, 0, 12)) EXPECT_EQ(a.sep->evaluate(n), b.sep->evaluate(n));
}

TEST(Colorings, CharacterSumsAlternating) {
  LinearCharacter sign(2, {1});
  auto rep = character_sumset_exp_poly({ints({0, 1})}, Z(), sign);
  ASSERT_EQ(rep.status, PipelineStatus::kOk);
  ASSERT_TRUE(rep.exp_poly.has_value());
  for (long long n = rep.exp_poly->threshold + 1; n <= 12; ++n) {
    std::vector<long long> pt{n};
    EXPECT_EQ(rep.exp_poly->evaluate(pt), Scalar(n % 2 == 0 ? 1 : 0));
  }
  LinearCharacter trivial(1, {0});
  auto counts = character_sumset_exp_poly({ints({0, 2, 3})}, Z(), trivial);
  ASSERT_TRUE(counts.exp_poly.has_value());
  for (long long n = counts.exp_poly->threshold + 1; n <= 10; ++n) {
    std::vector<long long> pt{n};
    EXPECT_EQ(counts.exp_poly->evaluate(pt), Scalar(3 * n));
  }
}

TEST(Colorings, CharacterSumsCyclic) {
  auto z3 = std::make_shared<CyclicAdditive>(3);
  LinearCharacter psi(3, {1});
  auto rep = character_sumset_exp_poly({ints({1})}, z3, psi);
  ASSERT_TRUE(rep.exp_poly.has_value());
  ASSERT_EQ(rep.exp_poly->summands.size(), 1u);
  EXPECT_EQ(rep.exp_poly->summands[0].root, std::vector<unsigned>{1});
  EXPECT_EQ(rep.exp_poly->summands[0].poly, PolynomialC::constant(1, Scalar(1)));
  LinearCharacter bad(2, {1});
  EXPECT_THROW(character_sumset_exp_poly({ints({1})}, z3, bad), PreconditionError);
}
