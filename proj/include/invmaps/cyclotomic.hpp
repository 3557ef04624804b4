#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace invmaps {

/// Integer coefficients of the p-th cyclotomic polynomial, constant term
/// first. Degree is Euler's phi(p).
std::vector<std::int64_t> cyclotomic_polynomial(int p);

/// Element of Z[t]/(Phi_p(t)), the ring of integers of the p-th cyclotomic
/// field, stored in the basis 1, t, ..., t^(phi(p)-1).
///
/// Every operation leaves the value reduced. Arithmetic is exact; an int64
/// overflow raises std::overflow_error instead of wrapping.
class CyclotomicInteger {
 public:
  static CyclotomicInteger from_integer(int p, std::int64_t value);
  /// t^exponent, reduced. Negative exponents are taken mod p.
  static CyclotomicInteger root_power(int p, std::int64_t exponent);
  /// Reduces an arbitrary-length coefficient vector (constant term first).
  static CyclotomicInteger from_coefficients(int p, std::vector<std::int64_t> coeffs);

  int order() const { return p_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  bool is_zero() const;
  /// True iff every coordinate beyond the constant vanishes.
  bool is_rational_integer() const;
  std::int64_t constant_term() const { return coords_.front(); }

  CyclotomicInteger operator+(const CyclotomicInteger& other) const;
  CyclotomicInteger operator-(const CyclotomicInteger& other) const;
  CyclotomicInteger operator*(const CyclotomicInteger& other) const;
  CyclotomicInteger operator-() const;
  /// this * t^exponent; cheaper than a general multiply.
  CyclotomicInteger times_root_power(int exponent) const;

  /// Re-reduces the stored coordinates; a no-op on canonical values.
  CyclotomicInteger reduced() const;

  bool operator==(const CyclotomicInteger& other) const {
    return p_ == other.p_ && coords_ == other.coords_;
  }

 private:
  using Modulus = std::shared_ptr<const std::vector<std::int64_t>>;

  CyclotomicInteger(int p, Modulus modulus, std::vector<std::int64_t> coords)
      : p_(p), modulus_(std::move(modulus)), coords_(std::move(coords)) {}

  static Modulus make_modulus(int p);
  static std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& modulus,
                                          std::vector<std::int64_t> coeffs);
  void require_same_order(const CyclotomicInteger& other) const;

  int p_;
  Modulus modulus_;
  std::vector<std::int64_t> coords_;
};

}  // namespace invmaps
