#include "invmaps/explorer.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "invmaps/errors.hpp"
#include "invmaps/poly_io.hpp"

namespace invmaps {

namespace {

struct Node {
  Polynomial poly;
  std::size_t parent;  // index into the node arena; root points to itself
  TensorStep step;
  int depth;
};

// Canonical key for deduplication: exact coefficients in graded-lex order.
std::string state_key(const Polynomial& g) {
  std::string key;
  for (const auto& [alpha, c] : g.terms()) {
    for (int e : alpha.exponents()) {
      key += std::to_string(e);
      key += ',';
    }
    key += c.get_str();
    key += ';';
  }
  return key;
}

std::vector<TensorStep> path_to(const std::vector<Node>& arena, std::size_t idx) {
  std::vector<TensorStep> steps;
  while (arena[idx].depth > 0) {
    steps.push_back(arena[idx].step);
    idx = arena[idx].parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

SpectrumReport explore_spectrum(const DiagonalCyclicGroup& group, SearchConfig config) {
  const auto cls = classify_admissible(group);
  if (!cls.admissible()) throw DomainError("group is not admissible");
  if (config.max_depth < 0) throw DomainError("max depth must be non-negative");
  for (const auto& s : config.allowed_fractions) {
    if (sgn(s) <= 0 || s > 1) throw DomainError("fractions must lie in (0, 1], got " + s.get_str());
  }
  std::sort(config.allowed_fractions.begin(), config.allowed_fractions.end());
  config.allowed_fractions.erase(std::unique(config.allowed_fractions.begin(), config.allowed_fractions.end()),
                                 config.allowed_fractions.end());

  const Polynomial f = canonical_polynomial(group).f_gamma;
  if (!config.max_degree) config.max_degree = f.degree() * (config.max_depth + 1);
  if (*config.max_degree < f.degree()) throw DomainError("max degree is below deg(f_Gamma)");

  SpectrumReport report;
  report.group = group;
  report.config = config;

  auto in_window = [&](std::size_t r) {
    return !config.rank_window || (r >= config.rank_window->first && r <= config.rank_window->second);
  };
  // With non-negative coefficients a step lowers the rank by at most one.
  auto can_reach_window = [&](std::size_t r, int remaining) {
    return !config.rank_window || static_cast<long long>(r) - remaining <=
                                      static_cast<long long>(config.rank_window->second);
  };

  std::vector<Node> arena;
  arena.push_back({f, 0, {}, 0});
  std::unordered_set<std::string> seen{state_key(f)};
  std::vector<std::size_t> frontier{0};
  std::map<std::size_t, std::size_t> best;  // rank -> node
  if (in_window(f.size())) best.emplace(f.size(), 0);
  report.frontier_size_per_level.push_back(1);

  for (int depth = 1; depth <= config.max_depth && !frontier.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      // Copy the support: arena may reallocate while children are appended.
      std::vector<MultiIndex> support;
      for (const auto& term : arena[idx].poly.terms()) support.push_back(term.first);
      for (const auto& alpha : support) {
        if (alpha.degree() + f.degree() > *config.max_degree) continue;
        for (const auto& s : config.allowed_fractions) {
          Polynomial child = tensor_at(arena[idx].poly, alpha, s, f);
          if (!can_reach_window(child.size(), config.max_depth - depth)) continue;
          if (!seen.insert(state_key(child)).second) continue;
          const std::size_t rank = child.size();
          arena.push_back({std::move(child), idx, {alpha, s}, depth});
          next.push_back(arena.size() - 1);
          if (in_window(rank)) best.try_emplace(rank, arena.size() - 1);
        }
      }
    }
    report.frontier_size_per_level.push_back(next.size());
    frontier = std::move(next);
  }

  for (const auto& [rank, idx] : best) {
    ConstructionTrace trace = replay_steps(group, path_to(arena, idx));
    if (trace.result != arena[idx].poly) throw std::logic_error("spectrum witness does not replay");
    report.achieved.emplace(rank, std::move(trace));
  }
  return report;
}

std::vector<TensorStep> parse_script(std::string_view text, std::size_t num_vars) {
  std::vector<TensorStep> steps;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      line = line.substr(first);
      const auto space = line.find_first_of(" \t");
      const std::string_view verb = line.substr(0, space);
      if (space == std::string_view::npos) throw ParseError("script step is missing a monomial", line_start + first);
      Rational fraction;
      if (verb == "mul") {
        fraction = 1;
      } else if (verb == "split") {
        fraction = Rational(1, 2);
      } else {
        throw ParseError("unknown script verb '" + std::string(verb) + "'", line_start + first);
      }
      try {
        steps.push_back({parse_monomial(line.substr(space + 1), num_vars), fraction});
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " (script line starting at offset " +
                         std::to_string(line_start) + ")");
      }
    }
    line_start = line_end + 1;
  }
  return steps;
}

std::vector<std::pair<std::size_t, Polynomial>> replay_script(const DiagonalCyclicGroup& group,
                                                              const std::vector<TensorStep>& steps) {
  const Polynomial f = canonical_polynomial(group).f_gamma;
  std::vector<std::pair<std::size_t, Polynomial>> out;
  out.emplace_back(f.size(), f);
  for (const auto& step : steps) {
    Polynomial next = tensor_at(out.back().second, step.target, step.fraction, f);
    out.emplace_back(next.size(), std::move(next));
  }
  return out;
}

}  // namespace invmaps
