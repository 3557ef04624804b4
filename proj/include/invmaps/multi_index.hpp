#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace invmaps {

// Exponent vector of a monomial x^alpha in a fixed number of variables.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit MultiIndex(std::vector<int> exps);
  MultiIndex(std::initializer_list<int> exps);

  // x_var^power in num_vars variables.
  static MultiIndex pure_power(std::size_t num_vars, std::size_t var, int power);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }
  int degree() const { return degree_; }

  // Exponent-wise sum, i.e. the exponent of the product of two monomials.
  MultiIndex operator+(const MultiIndex& other) const;

  // Drops the last variable; used when restricting to the hyperplane.
  MultiIndex without_last() const;

  bool operator==(const MultiIndex& other) const { return exps_ == other.exps_; }
  std::strong_ordering operator<=>(const MultiIndex& other) const {
    return exps_ <=> other.exps_;
  }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

// Graded-lexicographic order with x1 > x2 > ... , largest first. Used as the
// map comparator so that iteration order is serialization order.
struct GradedLexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a > b;
  }
};

}  // namespace invmaps
