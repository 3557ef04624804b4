#include "invmaps/verify.hpp"

namespace invmaps {

VerificationReport verify_bundle(const DiagonalCyclicGroup& group, const Polynomial& poly) {
  VerificationReport out;
  out.invariant = is_invariant(group, poly);
  out.hyperplane = satisfies_hyperplane_identity(poly);
  out.nonnegative = has_nonnegative_coefficients(poly);
  const auto rs = rank_and_signature(poly);
  out.rank = rs.rank;
  out.signature = rs.signature;
  if (out.all_pass()) out.sphere_target = 2 * out.rank - 1;
  return out;
}

}  // namespace invmaps
