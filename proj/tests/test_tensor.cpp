#include <gtest/gtest.h>

#include <random>

#include "invmaps/errors.hpp"
#include "invmaps/poly_io.hpp"
#include "invmaps/tensor.hpp"
#include "invmaps/verify.hpp"
#include "test_support.hpp"

using namespace invmaps;

namespace {

Polynomial P(const char* text, std::size_t n = 2) { return parse_polynomial(text, n); }

const Polynomial kF32 = P("x1^3 + 3 x1 x2 + x2^3");

// Exhaustive search for the lexicographically smallest (j, k).
std::optional<std::pair<long long, long long>> brute_postage(long long m, long long a, long long b) {
  for (long long j = 0; j * a <= m; ++j) {
    for (long long k = 0; j * a + k * b <= m; ++k) {
      if (j * a + k * b == m) return std::make_pair(j, k);
    }
  }
  return std::nullopt;
}

}  // namespace

TEST(TensorAt, MultiplyY3InF32) {
  const Polynomial g = tensor_at(kF32, MultiIndex{0, 3}, 1, kF32);
  EXPECT_EQ(g, P("x1^3 + 3 x1 x2 + x1^3 x2^3 + 3 x1 x2^4 + x2^6"));
  EXPECT_EQ(g.size(), 5U);
}

TEST(TensorAt, MultiplyX3InBinomialCube) {
  const Polynomial f = P("x1 + x2").pow(3);
  const Polynomial g = tensor_at(f, MultiIndex{3, 0}, 1, f);
  EXPECT_EQ(g, P("3 x1^2 x2 + 3 x1 x2^2 + x2^3 + x1^6 + 3 x1^5 x2 + 3 x1^4 x2^2 + x1^3 x2^3"));
  EXPECT_EQ(g.size(), 7U);
}

TEST(TensorAt, Errors) {
  EXPECT_THROW(tensor_at(kF32, MultiIndex{2, 0}, 1, kF32), DomainError);
  EXPECT_THROW(tensor_at(kF32, MultiIndex{3, 0}, 0, kF32), DomainError);
  EXPECT_THROW(tensor_at(kF32, MultiIndex{3, 0}, Rational(3, 2), kF32), DomainError);
  EXPECT_THROW(tensor_at(P("x1 - x2"), MultiIndex{0, 1}, 1, kF32), DomainError);
}

TEST(TensorAt, ArbitraryFraction) {
  const Polynomial g = tensor_at(kF32, MultiIndex{1, 1}, Rational(1, 3), kF32);
  EXPECT_EQ(g.coefficient(MultiIndex{1, 1}), 2);
  EXPECT_TRUE(satisfies_hyperplane_identity(g));
}

TEST(Operators, VOnF32) {
  const Polynomial v = op_V(kF32, kF32);
  EXPECT_EQ(v, P("1/2 x1^3 + 3 x1 x2 + x2^3 + 1/2 x1^6 + 3/2 x1^4 x2 + 1/2 x1^3 x2^3"));
  EXPECT_EQ(v.size(), 6U);
}

TEST(Operators, WOnF32) {
  EXPECT_EQ(op_W(kF32, kF32).size(), 5U);
  EXPECT_TRUE(pure_top_power(op_W(kF32, kF32)).has_value());
}

TEST(Operators, NeedPureTopPower) {
  EXPECT_THROW(op_V(P("3 x1 x2"), kF32), DomainError);
  EXPECT_THROW(op_W(P("x1^2 + x2^3"), kF32), DomainError);
  EXPECT_FALSE(pure_top_power(P("x1^2 + x2^3")).has_value());
}

TEST(Postage, Examples) {
  EXPECT_EQ(postage_stamp_decompose(2, 3, 2), std::make_optional(std::make_pair(0LL, 1LL)));
  EXPECT_FALSE(postage_stamp_decompose(1, 3, 2).has_value());
  EXPECT_EQ(postage_stamp_decompose(132, 13, 12), std::make_optional(std::make_pair(0LL, 11LL)));
  EXPECT_THROW(postage_stamp_decompose(10, 4, 6), DomainError);
  EXPECT_THROW(postage_stamp_decompose(10, 0, 1), DomainError);
}

TEST(Postage, AgreesWithExhaustiveSearch) {
  for (long long a = 1; a <= 20; ++a) {
    for (long long b = 1; b <= 20; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (long long m = 0; m <= 400; ++m) {
        const auto got = postage_stamp_decompose(m, a, b);
        ASSERT_EQ(got, brute_postage(m, a, b)) << m << " " << a << " " << b;
        if (m >= (a - 1) * (b - 1)) ASSERT_TRUE(got.has_value());
      }
    }
  }
}

TEST(Thm1, BaseRankIsFGamma) {
  const auto t = construct_thm1(make_group(3, {1, 2}), 3);
  EXPECT_TRUE(t.steps.empty());
  EXPECT_EQ(t.result, kF32);
}

TEST(Thm1, RankEightIsOneVOneW) {
  const auto t = construct_thm1(make_group(3, {1, 2}), 8);
  ASSERT_EQ(t.steps.size(), 2U);
  EXPECT_EQ(t.steps[0].fraction, 1);              // W first
  EXPECT_EQ(t.steps[1].fraction, Rational(1, 2));  // then V
  EXPECT_EQ(t.rank_after_each_step, (std::vector<std::size_t>{3, 5, 8}));
}

TEST(Thm1, GuaranteeForGamma5_112) {
  const auto g = make_group(5, {1, 1, 2});
  EXPECT_EQ(thm1_guaranteed_rank(13), 145);
  const auto t = construct_thm1(g, 145);
  EXPECT_EQ(t.result.size(), 145U);
  EXPECT_TRUE(verify_bundle(g, t.result).all_pass());
}

TEST(Thm1, Errors) {
  EXPECT_THROW(construct_thm1(make_group(3, {1, 2}), 4), DomainError);  // 1 = 3j + 2k has no solution
  EXPECT_THROW(construct_thm1(make_group(3, {1, 2}), 2), DomainError);
  EXPECT_THROW(construct_thm1(make_group(5, {1, 4}), 20), DomainError);
}

TEST(Thm2, G1ForScalarCube) {
  const auto t = construct_thm2(make_group(3, {1, 1}), 7);
  EXPECT_EQ(t.result.size(), 7U);
  EXPECT_EQ(t.steps.size(), 1U);
}

TEST(Thm2, G2ForScalarCube) {
  // g_2 = g_1 + 3 x y^2 (-1 + (x + y)^3), expanded directly.
  const Polynomial f = P("x1 + x2").pow(3);
  const Polynomial one = Polynomial::constant(2, 1);
  const Polynomial g1 = f + P("x1^3") * (f - one);
  const Polynomial g2 = g1 + P("3 x1 x2^2") * (f - one);
  ASSERT_EQ(g2.size(), 8U);
  const auto t = construct_thm2(make_group(3, {1, 1}), 8);
  EXPECT_EQ(t.result, g2);
}

TEST(Thm2, TwoBlockBranch) {
  const Polynomial f = kF32;
  const Polynomial one = Polynomial::constant(2, 1);
  const Polynomial g1 = f + P("x1^3") * (f - one);
  const Polynomial g2 = g1 + P("3 x1 x2") * (f - one);
  ASSERT_EQ(g2.size(), 6U);
  const auto t = construct_thm2(make_group(3, {1, 2}), 6);
  EXPECT_EQ(t.result, g2);
}

TEST(Thm2, NormalizedCoordinatesRoles) {
  // (5; 1, 3) is two-block with x2 carrying the normalized weight 1.
  const auto g = make_group(5, {1, 3});
  for (long long n = 7; n <= 20; ++n) {
    const auto t = construct_thm2(g, n);
    ASSERT_EQ(static_cast<long long>(t.result.size()), n);
    ASSERT_TRUE(verify_bundle(g, t.result).all_pass());
  }
}

TEST(Thm2, TrivialGroupInTwoVariables) {
  const auto g = make_group(1, {0, 0});
  for (long long n = 3; n <= 10; ++n) ASSERT_EQ(static_cast<long long>(construct_thm2(g, n).result.size()), n);
}

TEST(Thm2, Errors) {
  EXPECT_THROW(construct_thm2(make_group(3, {1, 1}), 6), DomainError);
  EXPECT_THROW(construct_thm2(make_group(3, {1, 1, 1}), 20), DomainError);
}

TEST(Traces, ReplayMatchesRecordedRanks) {
  const auto g = make_group(5, {1, 2});
  for (long long n = 10; n <= 40; ++n) {
    for (const auto& t : {construct_thm1(g, n), construct_thm2(g, n)}) {
      const auto replayed = replay_steps(g, t.steps);
      ASSERT_EQ(replayed.result, t.result);
      ASSERT_EQ(replayed.rank_after_each_step, t.rank_after_each_step);
      ASSERT_EQ(static_cast<long long>(t.result.size()), n);
    }
  }
}

TEST(TensorProperties, RandomSequencesPreserveInvariants) {
  const auto groups = testgen::admissible_groups(7, 2, 3);
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> pick_group(0, groups.size() - 1);
  std::uniform_int_distribution<int> length(1, 5);
  const Rational fractions[] = {Rational(1), Rational(1, 2), Rational(1, 3)};
  std::uniform_int_distribution<int> pick_fraction(0, 2);
  int vw_checks = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& g = groups[pick_group(rng)];
    const Polynomial f = canonical_polynomial(g).f_gamma;
    Polynomial state = f;
    const int steps = length(rng);
    for (int s = 0; s < steps; ++s) {
      if (auto top = pure_top_power(state); top && state.degree() <= 14) {
        ASSERT_EQ(op_V(state, f).size(), state.size() + f.size());
        ASSERT_EQ(op_W(state, f).size(), state.size() + f.size() - 1);
        ++vw_checks;
      }
      std::vector<MultiIndex> support;
      for (const auto& [alpha, c] : state.terms()) support.push_back(alpha);
      std::uniform_int_distribution<std::size_t> pick_term(0, support.size() - 1);
      const Rational& frac = fractions[pick_fraction(rng)];
      const Polynomial next = tensor_at(state, support[pick_term(rng)], frac, f);
      if (frac == 1) {
        ASSERT_GE(next.size() + 1, state.size());
      } else {
        ASSERT_GE(next.size(), state.size());
      }
      state = next;
      ASSERT_TRUE(is_invariant(g, state));
      ASSERT_TRUE(has_nonnegative_coefficients(state));
      ASSERT_TRUE(satisfies_hyperplane_identity(state));
    }
  }
  EXPECT_GT(vw_checks, 100);
}
