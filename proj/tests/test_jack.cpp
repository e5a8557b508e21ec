#include <gtest/gtest.h>

#include <thread>

#include "jackpieri/jack.hpp"

using namespace jackpieri;

namespace {

RatFunc d_var() { return RatFunc::variable(); }

template <class F>
std::vector<F> ones(int r) {
  return std::vector<F>(static_cast<std::size_t>(r), F(1));
}

}  // namespace

TEST(Jack, SingleBoxIsPowerSum) {
  for (int r = 1; r <= 4; ++r) {
    JackFamily<Rational> fam(r, Rational(3));
    std::vector<int> parts(static_cast<std::size_t>(r), 0);
    parts[0] = 1;
    const Partition m(parts);
    EXPECT_EQ(fam.jack(m)->expansion.coeffs().size(), 1u);
    EXPECT_EQ(fam.jack(m)->poly, monomial_symmetric<Rational>(m));
  }
}

TEST(Jack, RankOneIsMonomial) {
  JackFamily<RatFunc> fam(1, d_var());
  for (int m = 0; m <= 6; ++m)
    EXPECT_EQ(fam.jack(Partition{m})->poly, MultiPoly<RatFunc>::monomial(1, {m}, RatFunc(1)));
}

TEST(Jack, TwoRowOracle) {
  // Independent 2x2 solve: on (m_(2,0), m_(1,1)) the operator D acts by the
  // lower-triangular matrix [[2+2d, 0], [2d, d]] (see the hand expansion in
  // test_operators). The eigenvector with eigenvalue 2+2d and unit leading
  // entry has second entry 2d / ((2+2d) - d).
  const RatFunc d = d_var();
  const RatFunc top = RatFunc(2) + RatFunc(2) * d, low = d, off = RatFunc(2) * d;
  const RatFunc c11 = off / (top - low);
  JackFamily<RatFunc> fam(2, d);
  const auto p = fam.jack(Partition{2, 0});
  EXPECT_EQ(p->expansion.coefficient(Partition{2, 0}), RatFunc(1));
  EXPECT_EQ(p->expansion.coefficient(Partition{1, 1}), c11);
  EXPECT_EQ(c11, RatFunc(2) * d / (d + RatFunc(2)));
  EXPECT_EQ(to_string(p->expansion, "m"), "m[2,0] + (2*d/(d+2))*m[1,1]");
}

TEST(Jack, TriangularMonicAndHomogeneous) {
  auto check = [](auto& fam, int max_weight) {
    for (const auto& m : partitions_up_to(max_weight, fam.rank())) {
      const auto p = fam.jack(m);
      ASSERT_TRUE(p->expansion.coefficient(m) == decltype(p->expansion.coefficient(m))(1));
      for (const auto& [k, c] : p->expansion.coeffs()) {
        ASSERT_EQ(k.weight(), m.weight());
        ASSERT_TRUE(dominance_leq(k, m));
      }
      for (const auto& [e, c] : p->poly.terms()) ASSERT_EQ(total_degree(e), m.weight());
    }
  };
  JackFamily<RatFunc> sym2(2, d_var());
  check(sym2, 5);
  JackFamily<RatFunc> sym3(3, d_var());
  check(sym3, 4);
  JackFamily<Rational> rat3(3, Rational(1, 2));
  check(rat3, 4);
}

TEST(Jack, EigenfunctionOfD) {
  for (int r = 1; r <= 3; ++r) {
    JackFamily<RatFunc> fam(r, d_var());
    for (const auto& m : partitions_up_to(r == 3 ? 4 : 5, r)) {
      const auto& p = fam.jack(m)->poly;
      ASSERT_EQ(fam.ops().apply_D(p), p * fam.ops().d_eigenvalue(m)) << m.to_string();
    }
  }
}

TEST(Jack, SchurAtDTwo) {
  for (int r = 2; r <= 3; ++r) {
    JackFamily<Rational> fam(r, Rational(2));
    for (const auto& m : partitions_up_to(4, r))
      EXPECT_EQ(fam.jack(m)->poly, schur_bialternant<Rational>(m)) << m.to_string();
  }
}

TEST(Jack, SpecializationCommutesWithConstruction) {
  JackFamily<RatFunc> sym(3, d_var());
  for (const Rational d0 : {Rational(1), Rational(3), Rational(1, 2)}) {
    JackFamily<Rational> rat(3, d0);
    for (const auto& m : partitions_up_to(4, 3))
      for (const auto& [k, c] : sym.jack(m)->expansion.coeffs())
        ASSERT_EQ(eval_at_d(c, d0), rat.jack(m)->expansion.coefficient(k));
  }
}

TEST(Jack, EigenvalueCollisionIsDetected) {
  // E_(2,0) - E_(1,1) = 2 + d vanishes at d = -2.
  JackFamily<Rational> fam(2, Rational(-2));
  EXPECT_THROW(fam.jack(Partition{2, 0}), EigenvalueCollision);
  EXPECT_NO_THROW(fam.jack(Partition{1, 1}));
}

TEST(Jack, EvalAtOnes) {
  const RatFunc d = d_var();
  JackFamily<RatFunc> fam(2, d);
  EXPECT_EQ(fam.eval_at_ones(Partition{1, 0}), RatFunc(2));
  EXPECT_EQ(fam.eval_at_ones(Partition{0, 0}), RatFunc(1));
  // m_(2,0)(1,1) = 2 and m_(1,1)(1,1) = 1, so 2 + 2d/(d+2).
  EXPECT_EQ(fam.eval_at_ones(Partition{2, 0}), (RatFunc(4) * d + RatFunc(4)) / (d + RatFunc(2)));
  // At d = 2 this is h_2(1,1) = 3.
  EXPECT_EQ(eval_at_d(fam.eval_at_ones(Partition{2, 0}), Rational(2)), Rational(3));
}

TEST(Jack, PhiNormalization) {
  JackFamily<RatFunc> fam(3, d_var());
  EXPECT_EQ(fam.phi(Partition::zero(3))->poly, MultiPoly<RatFunc>::constant(3, RatFunc(1)));
  JackFamily<RatFunc> one(1, d_var());
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(one.phi(Partition{m})->poly, one.jack(Partition{m})->poly);
  for (const auto& m : partitions_up_to(3, 3))
    EXPECT_EQ(evaluate(fam.phi(m)->poly, ones<RatFunc>(3)), RatFunc(1));
}

TEST(Jack, ToJackBasisRoundTrip) {
  JackFamily<Rational> fam(3, Rational(3, 2));
  MultiPoly<Rational> f(3);
  std::vector<Rational> coeffs;
  int i = 1;
  for (const auto& m : partitions_up_to(4, 3)) {
    coeffs.push_back(Rational(i, i + 2));
    f += fam.jack(m)->poly * coeffs.back();
    ++i;
  }
  const auto basis = fam.to_jack_basis(f);
  i = 0;
  for (const auto& m : partitions_up_to(4, 3)) EXPECT_EQ(basis.at(m), coeffs[static_cast<std::size_t>(i++)]);
}

TEST(ACoefficient, EmptyProductAtRankOne) {
  const RatFunc d = d_var();
  for (Sign s : {Sign::plus, Sign::minus}) {
    EXPECT_EQ(a_coefficient(s, IntVector{3}, ASpec::single_index(0), d), RatFunc(1));
    EXPECT_EQ(a_coefficient(s, IntVector{3}, ASpec::subset_of(Subset{0}), d), RatFunc(1));
  }
}

TEST(ACoefficient, HandComputedValue) {
  // (x1 - x2 + d/2 + d/2) / (x1 - x2 + d/2) at x = (1, 0).
  const RatFunc d = d_var();
  EXPECT_EQ(a_coefficient(Sign::plus, IntVector{1, 0}, ASpec::single_index(0), d),
            (RatFunc(2) + RatFunc(2) * d) / (RatFunc(2) + d));
}

TEST(ACoefficient, VanishesOutsidePartitionCone) {
  const RatFunc d = d_var();
  for (int r = 2; r <= 4; ++r)
    for (const auto& x : partitions_up_to(4, r))
      for (int i = 0; i < r; ++i) {
        const auto minus = shift_by_subset(x.as_vector(), Subset::single(i), Sign::minus);
        const auto plus = shift_by_subset(x.as_vector(), Subset::single(i), Sign::plus);
        const RatFunc am = a_coefficient(Sign::minus, x.as_vector(), ASpec::single_index(i), d);
        const RatFunc ap = a_coefficient(Sign::plus, x.as_vector(), ASpec::single_index(i), d);
        // A_{-,i} itself vanishes except for the last index at a zero part,
        // where the companion factor s_r = x_r does.
        if (!minus.is_partition) {
          EXPECT_TRUE((am * shifted_entry(to_point<RatFunc>(x.as_vector()), i, d)).is_zero());
          EXPECT_EQ(am.is_zero(), i < r - 1) << x.to_string() << " i=" << i;
        } else {
          EXPECT_FALSE(am.is_zero());
        }
        EXPECT_EQ(ap.is_zero(), !plus.is_partition) << x.to_string() << " i=" << i;
      }
}

TEST(ACoefficient, PoleIsReported) {
  // x1 - x2 - (d/2)(1 - 2) = 0 when x = (0, 1), d = 2.
  EXPECT_THROW(a_coefficient(Sign::plus, IntVector{0, 1}, ASpec::single_index(0), Rational(2)), PoleInA);
}

TEST(ACoefficient, SubsetAndPairForms) {
  const Rational d(3);
  const std::vector<Rational> x{Rational(4), Rational(2), Rational(1)};
  const Rational single = a_coefficient(Sign::minus, x, ASpec::single_index(1), d);
  EXPECT_EQ(a_coefficient(Sign::minus, x, ASpec::subset_of(Subset{1}), d), single);
  EXPECT_EQ(a_coefficient(Sign::minus, x, ASpec::pair_in(1, Subset::full(3)), d), single);
  EXPECT_EQ(a_coefficient(Sign::minus, x, ASpec::pair_in(1, Subset{1}), d), Rational(1));
}

TEST(JackFamily, ConcurrentRequestsAgree) {
  JackFamily<Rational> fam(3, Rational(1, 3));
  const auto ps = partitions_up_to(4, 3);
  std::vector<std::thread> threads;
  std::vector<std::vector<MultiPoly<Rational>>> seen(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (const auto& m : ps) seen[static_cast<std::size_t>(t)].push_back(fam.jack(m)->poly);
    });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) EXPECT_EQ(seen[static_cast<std::size_t>(t)], seen[0]);
}
