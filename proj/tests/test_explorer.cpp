#include <gtest/gtest.h>

#include "invmaps/errors.hpp"
#include "invmaps/explorer.hpp"
#include "invmaps/poly_io.hpp"
#include "invmaps/report.hpp"
#include "invmaps/verify.hpp"

using namespace invmaps;

namespace {

std::vector<TensorStep> script(const char* text) { return parse_script(text, 3); }

bool has_rank(const SpectrumReport& r, std::size_t rank) { return r.achieved.count(rank) != 0; }

}  // namespace

TEST(Spectrum, Gamma3_112DepthThree) {
  SearchConfig cfg;
  cfg.max_depth = 3;
  const auto r = explore_spectrum(make_group(3, {1, 1, 2}), cfg);
  for (std::size_t rank : {7, 13, 14, 15, 16, 17, 18}) EXPECT_TRUE(has_rank(r, rank)) << rank;
  EXPECT_EQ(r.achieved.at(7).steps.size(), 0U);
  EXPECT_EQ(r.config.max_degree, 12);
  EXPECT_EQ(r.frontier_size_per_level.size(), 4U);
}

TEST(Spectrum, Gamma5_112WithWindow) {
  SearchConfig cfg;
  cfg.max_depth = 3;
  cfg.rank_window = std::make_pair(std::size_t{13}, std::size_t{39});
  const auto r = explore_spectrum(make_group(5, {1, 1, 2}), cfg);
  for (std::size_t rank : {13, 25, 26, 28, 29, 30, 31, 32, 33, 34, 35, 36, 39}) EXPECT_TRUE(has_rank(r, rank)) << rank;
  EXPECT_FALSE(has_rank(r, 27));
  for (const auto& [rank, trace] : r.achieved) {
    EXPECT_GE(rank, 13U);
    EXPECT_LE(rank, 39U);
  }
}

TEST(Spectrum, TrivialGroupDepthZero) {
  SearchConfig cfg;
  cfg.max_depth = 0;
  const auto r = explore_spectrum(make_group(1, {0, 0, 0}), cfg);
  ASSERT_EQ(r.achieved.size(), 1U);
  EXPECT_TRUE(has_rank(r, 3));
}

TEST(Spectrum, StoredWitnessesAreValid) {
  SearchConfig cfg;
  cfg.max_depth = 2;
  const auto g = make_group(3, {1, 1, 2});
  const auto r = explore_spectrum(g, cfg);
  for (const auto& [rank, trace] : r.achieved) {
    EXPECT_EQ(trace.result.size(), rank);
    EXPECT_TRUE(verify_bundle(g, trace.result).all_pass());
    EXPECT_EQ(replay_steps(g, trace.steps).result, trace.result);
  }
}

TEST(Spectrum, Deterministic) {
  SearchConfig cfg;
  cfg.max_depth = 2;
  cfg.allowed_fractions = {Rational(1), Rational(1, 2)};
  const auto g = make_group(3, {1, 2, 2});
  const auto a = spectrum_to_json(explore_spectrum(g, cfg)).dump();
  cfg.allowed_fractions = {Rational(1, 2), Rational(1), Rational(1)};
  const auto b = spectrum_to_json(explore_spectrum(g, cfg)).dump();
  EXPECT_EQ(a, b);
}

TEST(Spectrum, DegreeCapPrunes) {
  SearchConfig cfg;
  cfg.max_depth = 2;
  cfg.max_degree = 3;
  const auto r = explore_spectrum(make_group(3, {1, 1, 2}), cfg);
  EXPECT_EQ(r.frontier_size_per_level, (std::vector<std::size_t>{1, 0}));
}

TEST(Spectrum, Errors) {
  SearchConfig cfg;
  EXPECT_THROW(explore_spectrum(make_group(5, {1, 4}), cfg), DomainError);
  cfg.allowed_fractions = {Rational(2)};
  EXPECT_THROW(explore_spectrum(make_group(3, {1, 2}), cfg), DomainError);
  cfg = SearchConfig{};
  cfg.max_degree = 1;
  EXPECT_THROW(explore_spectrum(make_group(3, {1, 2}), cfg), DomainError);
}

TEST(Spectrum, MonotoneClosureAddsSixForGamma3_112) {
  SearchConfig cfg;
  cfg.max_depth = 2;
  const auto g = make_group(3, {1, 1, 2});
  const Polynomial f = canonical_polynomial(g).f_gamma;
  for (const auto& [rank, trace] : explore_spectrum(g, cfg).achieved) {
    Polynomial state = trace.result;
    for (int i = 0; i < 3; ++i) {
      const MultiIndex top = state.terms().begin()->first;
      const Polynomial next = tensor_at(state, top, 1, f);
      ASSERT_EQ(next.size(), state.size() + 6);
      state = next;
    }
  }
}

TEST(Replay, Gamma3_112Edges) {
  const auto g = make_group(3, {1, 1, 2});
  const auto mul = replay_script(g, script("mul x1^3"));
  EXPECT_EQ(mul.back().first, 13U);
  const auto split = replay_script(g, script("split x1^3"));
  EXPECT_EQ(split.back().first, 14U);
}

TEST(Replay, Gamma5_112Edges) {
  const auto states = replay_script(make_group(5, {1, 1, 2}), script("mul x1^5\nmul x1^4 x2\n"));
  ASSERT_EQ(states.size(), 3U);
  EXPECT_EQ(states[1].first, 25U);
  EXPECT_EQ(states[2].first, 28U);
}

TEST(Replay, EmptyScript) {
  const auto g = make_group(3, {1, 1, 2});
  const auto states = replay_script(g, {});
  ASSERT_EQ(states.size(), 1U);
  EXPECT_EQ(states[0].first, 7U);
  EXPECT_EQ(states[0].second, canonical_polynomial(g).f_gamma);
}

TEST(Replay, MissingMonomial) {
  EXPECT_THROW(replay_script(make_group(3, {1, 1, 2}), script("mul x1 x2 x3")), DomainError);
}

TEST(Script, Parsing) {
  const auto steps = script("# spectrum tree\n  split x1^3\n\nmul x1^2 x2\r\n");
  ASSERT_EQ(steps.size(), 2U);
  EXPECT_EQ(steps[0].fraction, Rational(1, 2));
  EXPECT_EQ(steps[0].target, (MultiIndex{3, 0, 0}));
  EXPECT_EQ(steps[1].fraction, 1);
  EXPECT_EQ(steps[1].target, (MultiIndex{2, 1, 0}));
  EXPECT_THROW(script("multiply x1"), ParseError);
  EXPECT_THROW(script("mul"), ParseError);
  EXPECT_THROW(script("mul 2 x1"), ParseError);
  EXPECT_THROW(script("mul x4"), ParseError);
}
