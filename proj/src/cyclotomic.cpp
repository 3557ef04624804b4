#include "invmaps/cyclotomic.hpp"

#include <stdexcept>
#include <string>

namespace invmaps {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("cyclotomic coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("cyclotomic coefficient overflow");
  return out;
}

// Exact quotient of polynomials over Z by a monic divisor.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int p) {
  if (p < 1) throw std::invalid_argument("cyclotomic order must be positive");
  // Phi_p = (t^p - 1) / prod_{d | p, d < p} Phi_d
  std::vector<std::int64_t> num(static_cast<std::size_t>(p) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(p)] = 1;
  for (int d = 1; d < p; ++d) {
    if (p % d == 0) num = divide_monic(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

CyclotomicInteger::Modulus CyclotomicInteger::make_modulus(int p) {
  return std::make_shared<const std::vector<std::int64_t>>(cyclotomic_polynomial(p));
}

std::vector<std::int64_t> CyclotomicInteger::reduce(const std::vector<std::int64_t>& modulus,
                                                    std::vector<std::int64_t> coeffs) {
  const std::size_t phi = modulus.size() - 1;
  for (std::size_t i = coeffs.size(); i-- > phi;) {
    const std::int64_t c = coeffs[i];
    if (c == 0) continue;
    // t^i = t^(i-phi) * (t^phi - Phi_p(t)), modulus is monic
    for (std::size_t k = 0; k < phi; ++k) {
      coeffs[i - phi + k] = checked_add(coeffs[i - phi + k], -checked_mul(c, modulus[k]));
    }
    coeffs[i] = 0;
  }
  coeffs.resize(phi, 0);
  return coeffs;
}

CyclotomicInteger CyclotomicInteger::from_coefficients(int p, std::vector<std::int64_t> coeffs) {
  Modulus modulus = make_modulus(p);
  auto coords = reduce(*modulus, std::move(coeffs));
  return CyclotomicInteger(p, std::move(modulus), std::move(coords));
}

CyclotomicInteger CyclotomicInteger::from_integer(int p, std::int64_t value) {
  return from_coefficients(p, {value});
}

CyclotomicInteger CyclotomicInteger::root_power(int p, std::int64_t exponent) {
  if (p < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::int64_t e = exponent % p;
  if (e < 0) e += p;
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(e) + 1, 0);
  coeffs.back() = 1;
  return from_coefficients(p, std::move(coeffs));
}

bool CyclotomicInteger::is_zero() const {
  for (auto c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicInteger::is_rational_integer() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

void CyclotomicInteger::require_same_order(const CyclotomicInteger& other) const {
  if (other.p_ != p_) {
    throw std::invalid_argument("cyclotomic orders differ: " + std::to_string(p_) + " vs " +
                                std::to_string(other.p_));
  }
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& other) const {
  require_same_order(other);
  auto coords = coords_;
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = checked_add(coords[i], other.coords_[i]);
  return CyclotomicInteger(p_, modulus_, std::move(coords));
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  auto coords = coords_;
  for (auto& c : coords) c = checked_mul(c, -1);
  return CyclotomicInteger(p_, modulus_, std::move(coords));
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& other) const {
  return *this + (-other);
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& other) const {
  require_same_order(other);
  std::vector<std::int64_t> prod(coords_.size() + other.coords_.size() - 1, 0);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coords_.size(); ++j) {
      prod[i + j] = checked_add(prod[i + j], checked_mul(coords_[i], other.coords_[j]));
    }
  }
  return CyclotomicInteger(p_, modulus_, reduce(*modulus_, std::move(prod)));
}

CyclotomicInteger CyclotomicInteger::times_root_power(int exponent) const {
  int e = exponent % p_;
  if (e < 0) e += p_;
  std::vector<std::int64_t> shifted(coords_.size() + static_cast<std::size_t>(e), 0);
  for (std::size_t i = 0; i < coords_.size(); ++i) shifted[i + static_cast<std::size_t>(e)] = coords_[i];
  return CyclotomicInteger(p_, modulus_, reduce(*modulus_, std::move(shifted)));
}

CyclotomicInteger CyclotomicInteger::reduced() const {
  return CyclotomicInteger(p_, modulus_, reduce(*modulus_, coords_));
}

}  // namespace invmaps
