#include <gtest/gtest.h>

#include <random>

#include "jackpieri/polyring.hpp"

using namespace jackpieri;

namespace {

using QP = MultiPoly<Rational>;

QP z(int rank, int i) { return QP::variable(rank, i); }
QP c(int rank, long v) { return QP::constant(rank, Rational(v)); }

QP random_poly(std::mt19937_64& rng, int rank, int max_degree, int terms) {
  std::uniform_int_distribution<int> exp(0, max_degree);
  std::uniform_int_distribution<long> coef(-9, 9);
  QP out(rank);
  for (int t = 0; t < terms; ++t) {
    Exponent e(static_cast<std::size_t>(rank));
    for (auto& x : e) x = exp(rng);
    out.add_term(e, Rational(coef(rng)));
  }
  return out;
}

}  // namespace

TEST(MultiPoly, Arithmetic) {
  const QP z1 = z(2, 0), z2 = z(2, 1);
  EXPECT_EQ((z1 + z2) * (z1 - z2), z1 * z1 - z2 * z2);
  EXPECT_EQ(z1 + QP(2), z1);
  EXPECT_EQ((z1 - z2) * (z1 - z2), z1 * z1 - c(2, 2) * z1 * z2 + z2 * z2);
  EXPECT_THROW(z1 + z(3, 0), RankMismatch);
}

TEST(MultiPoly, PartialDerivative) {
  const QP z1 = z(2, 0), z2 = z(2, 1);
  EXPECT_EQ(partial_derivative(z1 * z1, 0), c(2, 2) * z1);
  EXPECT_TRUE(partial_derivative(z1 * z1 * z1, 1).is_zero());
  EXPECT_EQ(partial_derivative(z1 * z2, 0), z2);
}

TEST(MultiPoly, DerivativesCommute) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const QP p = random_poly(rng, 3, 4, 8);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        ASSERT_EQ(partial_derivative(partial_derivative(p, i), j), partial_derivative(partial_derivative(p, j), i));
  }
}

TEST(MultiPoly, SubstituteShift) {
  const QP z1 = z(2, 0), z2 = z(2, 1);
  EXPECT_EQ(substitute_shift(z1, {Rational(1), Rational(0)}), z1 + c(2, 1));
  EXPECT_EQ(substitute_shift(z1 * z2, {Rational(0), Rational(0)}), z1 * z2);
  EXPECT_EQ(substitute_shift(z1 * z1, {Rational(-1), Rational(0)}), z1 * z1 - c(2, 2) * z1 + c(2, 1));
  EXPECT_THROW(substitute_shift(z1, {Rational(1)}), RankMismatch);
}

TEST(MultiPoly, SubstituteShiftInverts) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> off(-5, 5);
  for (int t = 0; t < 200; ++t) {
    const QP p = random_poly(rng, 3, 4, 6);
    std::vector<Rational> a{Rational(off(rng), 2), Rational(off(rng)), Rational(off(rng), 3)};
    std::vector<Rational> b{-a[0], -a[1], -a[2]};
    ASSERT_EQ(substitute_shift(substitute_shift(p, a), b), p);
  }
}

TEST(MultiPoly, DivideExact) {
  const QP z1 = z(2, 0), z2 = z(2, 1);
  EXPECT_EQ(divide_exact(vandermonde<Rational>(2), vandermonde<Rational>(2)), c(2, 1));
  EXPECT_EQ(divide_exact(z1 * z1 - z2 * z2, z1 - z2), z1 + z2);
  EXPECT_THROW(divide_exact(z1, z2), InexactDivision);
  EXPECT_THROW(divide_exact(z1, QP(2)), DivisionByZero);
}

TEST(MultiPoly, DivideExactRecoversFactor) {
  std::mt19937_64 rng(8);
  const std::vector<QP> divisors{vandermonde<Rational>(3), z(3, 0), z(3, 0) - z(3, 1)};
  for (int t = 0; t < 100; ++t) {
    const QP p = random_poly(rng, 3, 3, 6);
    for (const auto& q : divisors) ASSERT_EQ(divide_exact(p * q, q), p);
  }
}

TEST(MultiPoly, Evaluate) {
  const std::vector<Rational> ones{Rational(1), Rational(1)};
  EXPECT_EQ(evaluate(monomial_symmetric<Rational>(Partition{1, 0}), ones), Rational(2));
  EXPECT_EQ(evaluate(monomial_symmetric<Rational>(Partition{1, 1}), ones), Rational(1));
  EXPECT_EQ(evaluate(vandermonde<Rational>(2), ones), Rational(0));
  EXPECT_THROW(evaluate(vandermonde<Rational>(2), std::vector<Rational>{Rational(1)}), RankMismatch);
}

TEST(SymPoly, ToMonomialBasis) {
  const QP z1 = z(2, 0), z2 = z(2, 1);
  const SymPoly<Rational> s = to_monomial_basis(z1 * z1 + z2 * z2 + c(2, 3) * z1 * z2);
  EXPECT_EQ(s.coefficient(Partition{2, 0}), Rational(1));
  EXPECT_EQ(s.coefficient(Partition{1, 1}), Rational(3));
  EXPECT_EQ(s.coeffs().size(), 2u);
  EXPECT_THROW(to_monomial_basis(z1 - z2), NotSymmetric);
  const SymPoly<Rational> m21 = to_monomial_basis(monomial_symmetric<Rational>(Partition{2, 1, 0}));
  EXPECT_EQ(m21.coeffs().size(), 1u);
  EXPECT_EQ(m21.coefficient(Partition{2, 1, 0}), Rational(1));
}

TEST(SymPoly, RoundTripExhaustive) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n) {
      SymPoly<Rational> s(r);
      for (const auto& lambda : partitions_of(n, r)) {
        s.add_term(lambda, Rational(coef(rng), 1 + static_cast<long>(n)));
        const QP m = monomial_symmetric<Rational>(lambda);
        ASSERT_TRUE(is_symmetric(m));
        ASSERT_EQ(to_monomial_basis(m).expand(), m);
      }
      ASSERT_EQ(to_monomial_basis(s.expand()), s);
    }
}

TEST(SymPoly, ExpansionIsSymmetricUnderTranspositions) {
  for (const auto& lambda : partitions_up_to(5, 3)) {
    const QP m = monomial_symmetric<Rational>(lambda);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) ASSERT_EQ(swap_variables(m, i, j), m);
  }
}

TEST(Schur, BialternantMatchesSmallCases) {
  // s_(1,1) in two variables is z1 z2; s_(2,0) is h_2.
  const QP z1 = z(2, 0), z2 = z(2, 1);
  EXPECT_EQ(schur_bialternant<Rational>(Partition{1, 1}), z1 * z2);
  EXPECT_EQ(schur_bialternant<Rational>(Partition{2, 0}), z1 * z1 + z1 * z2 + z2 * z2);
}

TEST(Rendering, CanonicalAndPretty) {
  const RatFunc d = RatFunc::variable();
  MultiPoly<RatFunc> p(2);
  p.add_term({2, 1}, RatFunc(1));
  p.add_term({1, 1}, RatFunc(2) * d / (d + RatFunc(2)));
  EXPECT_EQ(to_string(p), "1*z1^2*z2 + (2*d/(d+2))*z1*z2");
  MultiPoly<Rational> q(1);
  q.add_term({2}, Rational(1));
  q.add_term({1}, Rational(-1));
  EXPECT_EQ(to_pretty_string(q), "z1^2 - z1");
  SymPoly<Rational> s(2);
  s.add_term(Partition{2, 0}, Rational(1));
  s.add_term(Partition{1, 1}, Rational(1));
  EXPECT_EQ(to_string(s, "m"), "m[2,0] + 1*m[1,1]");
}
