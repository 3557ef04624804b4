#include <gtest/gtest.h>

#include <random>

#include "invmaps/poly_io.hpp"
#include "invmaps/polynomial.hpp"
#include "test_support.hpp"

using namespace invmaps;

namespace {

Polynomial P(const char* text, std::size_t n = 2) { return parse_polynomial(text, n); }

bool is_graded_lex_sorted(const Polynomial& g) {
  const MultiIndex* prev = nullptr;
  for (const auto& [alpha, c] : g.terms()) {
    if (sgn(c) == 0) return false;
    if (prev && !GradedLexGreater{}(*prev, alpha)) return false;
    prev = &alpha;
  }
  return true;
}

}  // namespace

TEST(PolyArith, BinomialSquare) {
  const Polynomial s = P("x1 + x2");
  EXPECT_EQ(s * s, P("x1^2 + 2 x1 x2 + x2^2"));
}

TEST(PolyArith, MultiplyByPurePower) {
  EXPECT_EQ(P("x2^3") * P("x1^3 + 3 x1 x2 + x2^3"), P("x1^3 x2^3 + 3 x1 x2^4 + x2^6"));
}

TEST(PolyArith, AdditiveIdentityAndScale) {
  const Polynomial g = P("x1^3 + 3 x1 x2 + x2^3");
  EXPECT_EQ(g + Polynomial(2), g);
  EXPECT_EQ(g.scaled(Rational(1, 3)), P("1/3 x1^3 + x1 x2 + 1/3 x2^3"));
  EXPECT_TRUE(g.scaled(0).is_zero());
  EXPECT_TRUE((g - g).is_zero());
}

TEST(PolyArith, MismatchedVariablesThrow) {
  EXPECT_THROW(P("x1", 1) + P("x1", 2), std::invalid_argument);
  EXPECT_THROW(P("x1", 1) * P("x1", 2), std::invalid_argument);
}

TEST(PolyArith, CancellationLeavesNoZeroTerms) {
  Polynomial g = P("x1 + x2");
  g.add_term(MultiIndex{1, 0}, -1);
  EXPECT_EQ(g.size(), 1U);
  EXPECT_FALSE(g.contains(MultiIndex{1, 0}));
}

TEST(PolyArith, RingLawsOnRandomPolynomials) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> vars(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(vars(rng));
    const auto a = testgen::random_polynomial(rng, n, 6, 4);
    const auto b = testgen::random_polynomial(rng, n, 6, 4);
    const auto c = testgen::random_polynomial(rng, n, 6, 4);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE(is_graded_lex_sorted(a * (b + c)));
  }
}

TEST(RankSignature, Examples) {
  const auto cube = rank_and_signature(P("x1 + x2").pow(3));
  EXPECT_EQ(cube.rank, 4U);
  EXPECT_EQ(cube.signature, (Signature{4, 0}));

  const auto split = rank_and_signature(P("x1^2 - x2^2"));
  EXPECT_EQ(split.rank, 2U);
  EXPECT_EQ(split.signature, (Signature{1, 1}));

  EXPECT_EQ(rank_and_signature(Polynomial(3)).rank, 0U);
}

TEST(RankSignature, CountsAddUp) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testgen::random_polynomial(rng, 3, 5, 8);
    const auto rs = rank_and_signature(g);
    ASSERT_EQ(rs.signature.n_plus + rs.signature.n_minus, rs.rank);
    ASSERT_EQ(rs.rank, g.size());
  }
}

TEST(Hyperplane, CanonicalF32RestrictsToOne) {
  EXPECT_EQ(restrict_to_hyperplane(P("x1^3 + 3 x1 x2 + x2^3")), Polynomial::constant(1, 1));
  EXPECT_TRUE(satisfies_hyperplane_identity(P("x1^3 + 3 x1 x2 + x2^3")));
}

TEST(Hyperplane, LinearSumTelescopes) {
  EXPECT_EQ(restrict_to_hyperplane(P("x1 + x2 + x3", 3)), Polynomial::constant(2, 1));
}

TEST(Hyperplane, SingleVariableIsNotConstant) {
  const Polynomial r = restrict_to_hyperplane(P("x1"));
  EXPECT_EQ(r, P("x1", 1));
  EXPECT_FALSE(satisfies_hyperplane_identity(P("x1")));
}

TEST(Hyperplane, RationalCoefficients) {
  // (1/2) x^2 + x y + (1/2) y^2 + (1/2) x + (1/2) y = (1/2)(x+y)^2 + (1/2)(x+y)
  EXPECT_TRUE(satisfies_hyperplane_identity(P("1/2 x1^2 + x1 x2 + 1/2 x2^2 + 1/2 x1 + 1/2 x2")));
  EXPECT_EQ(restrict_to_hyperplane(P("1/3 x2")), P("1/3 - 1/3 x1", 1));
}

TEST(Hyperplane, OneVariableCollapsesToConstant) {
  const Polynomial r = restrict_to_hyperplane(P("3 x1^4 + 2", 1));
  EXPECT_EQ(r.num_vars(), 0U);
  EXPECT_EQ(r.coefficient(MultiIndex(0)), 5);
}

TEST(Hyperplane, RestrictionIsARingHomomorphism) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> vars(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(vars(rng));
    const auto a = testgen::random_polynomial(rng, n, 5, 4);
    const auto b = testgen::random_polynomial(rng, n, 5, 4);
    ASSERT_EQ(restrict_to_hyperplane(a * b), restrict_to_hyperplane(a) * restrict_to_hyperplane(b));
    ASSERT_EQ(restrict_to_hyperplane(a + b), restrict_to_hyperplane(a) + restrict_to_hyperplane(b));
  }
}

TEST(Hyperplane, AgreesWithSubstitutionByComposition) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testgen::random_polynomial(rng, 3, 5, 6);
    std::vector<Polynomial> subs{P("x1", 2), P("x2", 2), P("1 - x1 - x2", 2)};
    ASSERT_EQ(restrict_to_hyperplane(g), g.compose(subs));
  }
}

TEST(Polynomial, DegreeAndPow) {
  EXPECT_EQ(P("x1^3 x2 + x2").degree(), 4);
  EXPECT_EQ(Polynomial(2).degree(), 0);
  EXPECT_EQ(P("x1 + x2").pow(0), Polynomial::constant(2, 1));
  EXPECT_EQ(P("x1 + x2").pow(3).size(), 4U);
}
