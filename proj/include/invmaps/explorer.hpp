#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invmaps/tensor.hpp"

namespace invmaps {

struct SearchConfig {
  int max_depth = 3;
  /// Children above this total degree are discarded. Defaults to
  /// deg(f_Gamma) * (max_depth + 1).
  std::optional<int> max_degree;
  /// Expanded in ascending order.
  std::vector<Rational> allowed_fractions{Rational(1, 2), Rational(1)};
  /// Inclusive; ranks outside are not reported and states that cannot reach
  /// it within the remaining depth are not expanded.
  std::optional<std::pair<std::size_t, std::size_t>> rank_window;
};

struct SpectrumReport {
  DiagonalCyclicGroup group;
  /// Config with defaults filled in.
  SearchConfig config;
  /// Minimal-depth witness per achieved rank.
  std::map<std::size_t, ConstructionTrace> achieved;
  /// Number of new states at depth 0, 1, ...
  std::vector<std::size_t> frontier_size_per_level;
};

/// Breadth-first search over tensor_at steps starting from f_Gamma. States are
/// deduplicated on the exact polynomial; output is deterministic for a fixed
/// config. Throws DomainError for groups that are not admissible.
SpectrumReport explore_spectrum(const DiagonalCyclicGroup& group, SearchConfig config);

/// Parses a replay script: one step per line, "mul <monomial>" or
/// "split <monomial>"; blank lines and lines starting with '#' are skipped.
std::vector<TensorStep> parse_script(std::string_view text, std::size_t num_vars);

/// Applies steps to f_Gamma in order and returns (rank, polynomial) for
/// f_Gamma and after every step.
std::vector<std::pair<std::size_t, Polynomial>> replay_script(const DiagonalCyclicGroup& group,
                                                              const std::vector<TensorStep>& steps);

}  // namespace invmaps
