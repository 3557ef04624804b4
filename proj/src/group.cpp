#include "invmaps/group.hpp"

#include <algorithm>
#include <numeric>

#include "invmaps/errors.hpp"

namespace invmaps {

DiagonalCyclicGroup make_group(int p, const std::vector<int>& weights) {
  if (p < 1) throw DomainError("group order must be positive, got " + std::to_string(p));
  if (weights.empty()) throw DomainError("weight vector must be nonempty");
  DiagonalCyclicGroup g;
  g.p_ = p;
  g.weights_.reserve(weights.size());
  for (int a : weights) g.weights_.push_back(((a % p) + p) % p);
  // No non-identity power fixes a coordinate axis iff every weight is a unit.
  g.fixed_point_free_ = std::all_of(g.weights_.begin(), g.weights_.end(),
                                    [p](int a) { return p == 1 || std::gcd(a, p) == 1; });
  return g;
}

std::string to_string(Admissibility tag) {
  switch (tag) {
    case Admissibility::Trivial: return "Trivial";
    case Admissibility::FullScalar: return "FullScalar";
    case Admissibility::TwoBlock: return "TwoBlock";
    case Admissibility::SevenBlock: return "SevenBlock";
    case Admissibility::NotAdmissible: return "NotAdmissible";
  }
  return "NotAdmissible";
}

namespace {

bool all_in(const std::vector<int>& sorted, std::initializer_list<int> allowed) {
  return std::all_of(sorted.begin(), sorted.end(), [&](int w) {
    return std::find(allowed.begin(), allowed.end(), w) != allowed.end();
  });
}

bool contains_value(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

AdmissibilityClass classify_admissible(const DiagonalCyclicGroup& group) {
  if (!group.fixed_point_free()) {
    throw DomainError("group of order " + std::to_string(group.order()) + " is not fixed-point-free");
  }
  const int p = group.order();
  AdmissibilityClass out;
  if (p == 1) {
    out.tag = Admissibility::Trivial;
    out.unit = 1;
    out.normalized_weights.assign(group.dimension(), 0);
    out.coordinate_roles = out.normalized_weights;
    return out;
  }

  auto scaled_by = [&](int u) {
    std::vector<int> roles;
    for (int a : group.weights()) roles.push_back(static_cast<int>((static_cast<long long>(u) * a) % p));
    return roles;
  };
  auto accept = [&](Admissibility tag, int u, std::vector<int> roles) {
    out.tag = tag;
    out.unit = u;
    out.normalized_weights = roles;
    std::sort(out.normalized_weights.begin(), out.normalized_weights.end());
    out.coordinate_roles = std::move(roles);
  };

  // Families are tried in order of specificity; the first unit that matches wins.
  for (int u = 1; u < p; ++u) {
    if (std::gcd(u, p) != 1) continue;
    auto roles = scaled_by(u);
    if (all_in(roles, {1})) {
      accept(Admissibility::FullScalar, u, std::move(roles));
      return out;
    }
  }
  if (p % 2 == 1) {
    for (int u = 1; u < p; ++u) {
      if (std::gcd(u, p) != 1) continue;
      auto roles = scaled_by(u);
      if (all_in(roles, {1, 2}) && contains_value(roles, 1) && contains_value(roles, 2)) {
        accept(Admissibility::TwoBlock, u, std::move(roles));
        return out;
      }
    }
  }
  if (p == 7) {
    for (int u = 1; u < p; ++u) {
      auto roles = scaled_by(u);
      if (all_in(roles, {1, 2, 4})) {
        accept(Admissibility::SevenBlock, u, std::move(roles));
        return out;
      }
    }
  }
  out.tag = Admissibility::NotAdmissible;
  return out;
}

bool is_invariant(const DiagonalCyclicGroup& group, const MultiIndex& alpha) {
  if (alpha.size() != group.dimension()) {
    throw DomainError("monomial has " + std::to_string(alpha.size()) + " variables, group acts on " +
                      std::to_string(group.dimension()));
  }
  long long total = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    total = (total + static_cast<long long>(group.weights()[j]) * alpha[j]) % group.order();
  }
  return total == 0;
}

bool is_invariant(const DiagonalCyclicGroup& group, const Polynomial& g) {
  if (g.num_vars() != group.dimension()) {
    throw DomainError("polynomial has " + std::to_string(g.num_vars()) + " variables, group acts on " +
                      std::to_string(group.dimension()));
  }
  return std::all_of(g.terms().begin(), g.terms().end(),
                     [&](const auto& term) { return is_invariant(group, term.first); });
}

}  // namespace invmaps
