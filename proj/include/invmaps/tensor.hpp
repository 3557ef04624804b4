#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "invmaps/canonical.hpp"
#include "invmaps/group.hpp"
#include "invmaps/polynomial.hpp"

namespace invmaps {

/// Replace the fraction s of the term c x^alpha by s c x^alpha f.
/// s = 1 multiplies the whole term, s = 1/2 is a split.
struct TensorStep {
  MultiIndex target;
  Rational fraction = 1;

  bool operator==(const TensorStep&) const = default;
};

/// Ordered tensoring steps applied to f_Gamma, with the rank after each.
struct ConstructionTrace {
  DiagonalCyclicGroup group;
  std::vector<TensorStep> steps;
  Polynomial result;
  /// rank of f_Gamma followed by the rank after each step.
  std::vector<std::size_t> rank_after_each_step;
};

/// g - s c x^alpha + s c x^alpha f, where c is the coefficient of x^alpha in g.
///
/// Throws DomainError if x^alpha is not in the support of g, if its
/// coefficient is not positive, or if s is outside (0, 1].
Polynomial tensor_at(const Polynomial& g, const MultiIndex& alpha, const Rational& s, const Polynomial& f);

/// x1^d where d = deg g, if g contains it. The operators V and W act there.
std::optional<MultiIndex> pure_top_power(const Polynomial& g);

/// (Vg) = g + (c/2) x1^d (f - 1): rank grows by rank(f).
Polynomial op_V(const Polynomial& g, const Polynomial& f);
/// (Wg) = g + c x1^d (f - 1): rank grows by rank(f) - 1.
Polynomial op_W(const Polynomial& g, const Polynomial& f);

/// Lexicographically smallest (j, k) >= 0 with j A + k B = M, or nullopt.
/// Always found when M >= (A-1)(B-1). Throws DomainError unless A, B are
/// coprime positive integers.
std::optional<std::pair<long long, long long>> postage_stamp_decompose(long long m, long long a, long long b);

/// Smallest rank from which construct_thm1 is guaranteed: N^2 - 2N + 2.
long long thm1_guaranteed_rank(long long n_gamma);

/// V^j W^k f_Gamma of rank exactly target_rank, where
/// target_rank - N(Gamma) = j N(Gamma) + k (N(Gamma) - 1).
ConstructionTrace construct_thm1(const DiagonalCyclicGroup& group, long long target_rank);

/// Two-variable construction reaching every rank >= 2 N(Gamma) - 1 via g_1,
/// the g_j family and repeated multiplication at the top pure x-power.
ConstructionTrace construct_thm2(const DiagonalCyclicGroup& group, long long target_rank);

/// Re-applies trace.steps to f_Gamma from scratch. Throws DomainError if a
/// step is invalid.
ConstructionTrace replay_steps(const DiagonalCyclicGroup& group, const std::vector<TensorStep>& steps);

}  // namespace invmaps
