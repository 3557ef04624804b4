#pragma once

#include <optional>

#include "invmaps/group.hpp"
#include "invmaps/polynomial.hpp"

namespace invmaps {

struct VerificationReport {
  bool invariant = false;
  bool hyperplane = false;
  bool nonnegative = false;
  std::size_t rank = 0;
  Signature signature;
  /// 2 rank - 1, present exactly when all three checks pass.
  std::optional<std::size_t> sphere_target;

  bool all_pass() const { return invariant && hyperplane && nonnegative; }
};

/// Runs invariance, the hyperplane identity and non-negativity exactly.
/// Throws DomainError when poly and group have different dimensions.
VerificationReport verify_bundle(const DiagonalCyclicGroup& group, const Polynomial& poly);

}  // namespace invmaps
