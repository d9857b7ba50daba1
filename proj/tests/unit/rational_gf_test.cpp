#include <evpoly/errors.hpp>
#include <evpoly/rational_gf.hpp>
#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"

using namespace evpoly;

namespace {

Scalar coef(const RationalGF& f, std::vector<unsigned> n) { return coefficient(f, n); }

std::vector<long long> ll(const Point& p) { return {p.begin(), p.end()}; }

}  // namespace

TEST(RationalGF, CoefficientOfShiftedPole) {
  auto f = RationalGF::untwisted({2}, {3});
  EXPECT_EQ(coef(f, {5}), Scalar(10));
  EXPECT_EQ(coef(f, {1}), Scalar(0));
  EXPECT_EQ(coef(f, {2}), Scalar(1));
}

TEST(RationalGF, NormalizationMergesAndDropsTerms) {
  auto f = RationalGF::untwisted({1, 0}, {1, 1}, Scalar(2));
  auto g = RationalGF::untwisted({1, 0}, {1, 1}, Scalar(-2));
  EXPECT_TRUE((f + g).is_zero());
  EXPECT_EQ((f + f).terms().size(), 1u);
  EXPECT_THROW(f + RationalGF::monomial({1}), ArityError);
  GFTerm zero_twist{Scalar(1), {0}, {Scalar(0)}, {3}};
  RationalGF h(1, {zero_twist});
  EXPECT_EQ(h.terms()[0].e[0], 0u);
  EXPECT_EQ(coef(h, {0}), Scalar(1));
  EXPECT_EQ(coef(h, {1}), Scalar(0));
}

TEST(RationalGF, MixedTwistContextsRejected) {
  GFTerm a{Scalar(1), {0}, {Scalar::root_of_unity(3, 1)}, {1}};
  GFTerm b{Scalar(1), {0}, {Scalar::root_of_unity(4, 1)}, {1}};
  EXPECT_THROW(RationalGF(1, {a, b}), ContextError);
}

TEST(RationalGF, ExtractSepShiftedGeometric) {
  auto sep = extract_sep(RationalGF::untwisted({2}, {1}));
  EXPECT_EQ(sep.threshold, 2u);
  EXPECT_TRUE(sep.table.at({0}).is_zero());
  EXPECT_TRUE(sep.table.at({1}).is_zero());
  EXPECT_EQ(sep.table.at({2}), PolynomialQ::constant(1, 1));
  EXPECT_EQ(sep.table.at({kInfinity}), PolynomialQ::constant(1, 1));
}

TEST(RationalGF, ExtractSepDoublePole) {
  auto sep = extract_sep(RationalGF::untwisted({0}, {2}));
  EXPECT_EQ(sep.threshold, 0u);
  EXPECT_EQ(format_polynomial(sep.table.at({kInfinity})), "1 + n");
  EXPECT_EQ(sep.table.at({0}), PolynomialQ::constant(1, 1));
}

TEST(RationalGF, ExtractSepRejectsTwists) {
  GFTerm t{Scalar(1), {0}, {Scalar(-1)}, {1}};
  EXPECT_THROW(extract_sep(RationalGF(1, {t})), UnsupportedError);
}

TEST(RationalGF, ExtractExpPolyAlternatingDoublePole) {
  GFTerm t{Scalar(1), {0}, {Scalar(-1)}, {2}};
  auto ep = extract_exp_poly(RationalGF(1, {t}));
  EXPECT_EQ(ep.order, 2u);
  ASSERT_EQ(ep.summands.size(), 1u);
  EXPECT_EQ(ep.summands[0].root, std::vector<unsigned>{1});
  EXPECT_EQ(format_polynomial(ep.summands[0].poly), "1 + n");
}

TEST(RationalGF, ExtractExpPolyRejectsNonRootTwist) {
  GFTerm t{Scalar(1), {0}, {Scalar(2)}, {1}};
  EXPECT_THROW(extract_exp_poly(RationalGF(1, {t})), UnsupportedError);
}

TEST(RationalGF, PartialFractionsReproduceSeries) {
  auto pf = partial_fractions({{Scalar(1), 1}, {Scalar(2), 1}});
  std::vector<GFTerm> terms;
  for (const auto& p : pf) terms.push_back({p.coeff, {0}, {p.beta}, {p.d}});
  RationalGF sum(1, terms);
  RationalGF direct(2, {{Scalar(1), {0, 0}, {Scalar(1), Scalar(2)}, {1, 1}}});
  auto diag = p_substitution(direct, single_block(2));
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(coef(sum, {n}), coef(diag, {n})) << n;
  // 1/((1-y)(1-2y)) has coefficients 2^{n+1} - 1.
  EXPECT_EQ(coef(sum, {5}), Scalar(63));
  EXPECT_THROW(partial_fractions({{Scalar(1), 1}, {Scalar(1), 2}}), PreconditionError);
}

TEST(RationalGFProperty, CoefficientMatchesSeriesExpansion) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    unsigned order = trial % 2 ? 1u : static_cast<unsigned>(gen::uniform(rng, 2, 6));
    auto f = gen::random_gf(rng, k, 5, order);
    const unsigned box = k == 3 ? 5 : 8;
    oracle::SeriesTable table(f, box);
    oracle::for_box(k, box, [&](const Point& x) { ASSERT_EQ(coefficient(f, x), table.at(x)); });
  }
}

TEST(RationalGFProperty, ExtractSepReproducesEveryCoefficient) {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    auto f = gen::random_gf(rng, k, 6);
    auto sep = extract_sep(f);
    const unsigned box = k == 3 ? 6 : 9;
    oracle::SeriesTable table(f, box);
    oracle::for_box(k, box, [&](const Point& x) {
      auto n = ll(x);
      ASSERT_EQ(Scalar(sep.evaluate(n)), table.at(x));
    });
    for (const auto& [w, p] : sep.table) {
      std::vector<bool> free(k);
      for (std::size_t i = 0; i < k; ++i) free[i] = w[i] == kInfinity;
      EXPECT_TRUE(p.uses_only(free));
    }
  }
}

TEST(RationalGFProperty, ExtractExpPolyBeyondThreshold) {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
    unsigned order = static_cast<unsigned>(gen::uniform(rng, 1, 6));
    auto f = gen::random_gf(rng, k, 4, order);
    auto ep = extract_exp_poly(f);
    const unsigned box = ep.threshold + 8;
    oracle::SeriesTable table(f, box);
    oracle::for_box(k, box, [&](const Point& x) {
      for (unsigned v : x)
        if (v <= ep.threshold) return;
      ASSERT_EQ(ep.evaluate(ll(x)), table.at(x));
    });
  }
}

TEST(RationalGFProperty, SubstitutionSumsAlongFibers) {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    auto f = gen::random_gf(rng, k, 4, trial % 3 == 0 ? 3u : 1u);
    const unsigned box = 6;
    oracle::SeriesTable table(f, box);
    for (const auto& p : gen::all_partitions(k)) {
      auto g = p_substitution(f, p);
      ASSERT_EQ(g.arity(), p.size());
      std::map<Point, Scalar> fibers;
      oracle::for_box(k, box, [&](const Point& a) {
        Point n(p.size(), 0);
        for (std::size_t j = 0; j < p.size(); ++j)
          for (std::size_t i : p[j]) n[j] += a[i];
        for (unsigned v : n)
          if (v > box) return;
        fibers[n] += table.at(a);
      });
      oracle::for_box(p.size(), box, [&](const Point& n) {
        Scalar expect = fibers.count(n) ? fibers[n] : Scalar(0);
        ASSERT_EQ(coefficient(g, n), expect);
      });
    }
  }
}

TEST(RationalGFProperty, AdditionIsLinearOnCoefficients) {
  std::mt19937 rng(505);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = gen::random_gf(rng, 2, 4);
    auto g = gen::random_gf(rng, 2, 4);
    Scalar c(gen::small_rational(rng));
    auto h = f + scalar_mul(c, g);
    oracle::for_box(2, 6, [&](const Point& x) { ASSERT_EQ(coefficient(h, x), coefficient(f, x) + c * coefficient(g, x)); });
  }
}
