#pragma once

#include <string>
#include <vector>

#include "invmaps/multi_index.hpp"
#include "invmaps/polynomial.hpp"

namespace invmaps {

/// The cyclic group generated by diag(w^a_1, ..., w^a_n), w a primitive p-th
/// root of unity. Groups that are not fixed-point-free are representable so
/// callers can explain why they are refused.
class DiagonalCyclicGroup {
 public:
  int order() const { return p_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t dimension() const { return weights_.size(); }
  bool fixed_point_free() const { return fixed_point_free_; }
  bool is_trivial() const { return p_ == 1; }

  bool operator==(const DiagonalCyclicGroup&) const = default;

 private:
  friend DiagonalCyclicGroup make_group(int p, const std::vector<int>& weights);

  int p_ = 1;
  std::vector<int> weights_;
  bool fixed_point_free_ = true;
};

/// Reduces the weights mod p and computes the fixed-point-free flag. Throws
/// DomainError for p < 1 or an empty weight vector.
DiagonalCyclicGroup make_group(int p, const std::vector<int>& weights);

enum class Admissibility { Trivial, FullScalar, TwoBlock, SevenBlock, NotAdmissible };

std::string to_string(Admissibility tag);

struct AdmissibilityClass {
  Admissibility tag = Admissibility::NotAdmissible;
  /// Sorted standard-form weights, e.g. (1,1,2) for a two-block group.
  std::vector<int> normalized_weights;
  /// Unit u with u * weights mod p equal to a permutation of normalized_weights;
  /// 0 when the group is not admissible.
  int unit = 0;
  /// u * a_j mod p for each coordinate, i.e. the block each coordinate lives in.
  std::vector<int> coordinate_roles;

  bool admissible() const { return tag != Admissibility::NotAdmissible; }
};

/// Classifies a fixed-point-free group against the three admissible families
/// (up to permutation of coordinates and choice of primitive root). Throws
/// DomainError for groups that are not fixed-point-free.
AdmissibilityClass classify_admissible(const DiagonalCyclicGroup& group);

/// Sum_j a_j alpha_j == 0 (mod p).
bool is_invariant(const DiagonalCyclicGroup& group, const MultiIndex& alpha);
/// Every stored monomial is invariant.
bool is_invariant(const DiagonalCyclicGroup& group, const Polynomial& g);

}  // namespace invmaps
