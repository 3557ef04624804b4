#include "invmaps/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace invmaps {

MultiIndex::MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent in multi-index");
    degree_ += e;
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> exps)
    : MultiIndex(std::vector<int>(exps)) {}

MultiIndex MultiIndex::pure_power(std::size_t num_vars, std::size_t var, int power) {
  std::vector<int> exps(num_vars, 0);
  exps.at(var) = power;
  return MultiIndex(std::move(exps));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw std::invalid_argument("multi-index length mismatch");
  MultiIndex out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  out.degree_ = degree_ + other.degree_;
  return out;
}

MultiIndex MultiIndex::without_last() const {
  if (exps_.empty()) throw std::invalid_argument("empty multi-index");
  return MultiIndex(std::vector<int>(exps_.begin(), exps_.end() - 1));
}

}  // namespace invmaps
