#include <evpoly/cyclotomic.hpp>
#include <evpoly/errors.hpp>
#include <evpoly/polynomial.hpp>
#include <gtest/gtest.h>

#include <random>

using namespace evpoly;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), make_rational(-7));
  EXPECT_EQ(to_string(make_rational(-3, 6)), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), PreconditionError);
  EXPECT_THROW(parse_rational("x"), PreconditionError);
  EXPECT_THROW(parse_rational("1.5"), PreconditionError);
}

TEST(Cyclotomic, PolynomialsAndTotient) {
  EXPECT_EQ(totient(12), 4u);
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long long>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, RootsOfUnity) {
  for (unsigned m : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
    Cyclotomic z = Cyclotomic::root_of_unity(m, 1);
    EXPECT_EQ(z.pow(m), Cyclotomic(1)) << m;
    Cyclotomic sum(0);
    for (unsigned t = 0; t < m; ++t) sum += z.pow(t);
    EXPECT_EQ(sum, Cyclotomic(m == 1 ? 1 : 0)) << m;
    for (unsigned t = 0; t < m; ++t) EXPECT_EQ(z.pow(t).root_exponent(), t);
  }
  EXPECT_EQ(Cyclotomic::root_of_unity(4, -1), Cyclotomic::root_of_unity(4, 3));
  EXPECT_EQ(Cyclotomic::root_of_unity(2, 1), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root_of_unity(6, 3).as_rational(), make_rational(-1));
  EXPECT_FALSE(Cyclotomic(2).root_exponent().has_value());
}

TEST(Cyclotomic, MixedContextsRejected) {
  auto a = Cyclotomic::root_of_unity(3, 1);
  auto b = Cyclotomic::root_of_unity(4, 1);
  EXPECT_THROW(a + b, ContextError);
  EXPECT_NO_THROW(a + Cyclotomic(5));
  EXPECT_EQ(a.embed(6), Cyclotomic::root_of_unity(6, 2));
}

TEST(Cyclotomic, FieldAxiomsOnRandomElements) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (unsigned m : {3u, 4u, 5u, 8u, 9u, 12u}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto draw = [&] {
        std::vector<Rational> c;
        for (unsigned i = 0; i < m; ++i) c.push_back(make_rational(coef(rng), 1 + (coef(rng) + 4) % 3));
        return Cyclotomic::from_coeffs(m, c);
      };
      Cyclotomic x = draw(), y = draw(), w = draw();
      EXPECT_EQ(x * (y + w), x * y + x * w);
      EXPECT_EQ(x * y, y * x);
      if (!x.is_zero()) {
        EXPECT_EQ(x * x.inverse(), Cyclotomic(1));
        EXPECT_EQ((y / x) * x, y);
      }
    }
  }
}

TEST(Polynomial, FormattingAndEvaluation) {
  PolynomialQ p = univariate({make_rational(1), make_rational(2), make_rational(1)});
  EXPECT_EQ(format_polynomial(p), "1 + 2n + n^2");
  std::vector<long long> n{4};
  EXPECT_EQ(p.evaluate(n), 25);
  PolynomialQ q = PolynomialQ::constant(2, 1) + PolynomialQ::variable(2, 0) + PolynomialQ::variable(2, 1) * make_rational(2);
  EXPECT_EQ(format_polynomial(q), "1 + n1 + 2 n2");
  EXPECT_TRUE(has_integer_coefficients(q));
  EXPECT_FALSE(has_integer_coefficients(q * make_rational(1, 2)));
}

TEST(Polynomial, BinomialPolynomialMatchesPascal) {
  for (unsigned e = 1; e <= 4; ++e)
    for (unsigned b = 0; b <= 3; ++b) {
      PolynomialQ p = binomial_polynomial(1, 0, b, e);
      for (long long n = b; n <= 12; ++n) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n - b + e - 1), e - 1);
        std::vector<long long> pt{n};
        EXPECT_EQ(p.evaluate(pt), Rational(c)) << "e=" << e << " b=" << b << " n=" << n;
      }
    }
}
