#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "invmaps/multi_index.hpp"

namespace invmaps {

using Rational = mpq_class;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in canonical form: no zero coefficient is ever stored and
/// iteration runs in graded-lex order (highest total degree first, ties broken
/// lexicographically with x1 > x2 > ...). Equality is structural.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexGreater>;

  explicit Polynomial(std::size_t num_vars = 1) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& value);
  static Polynomial monomial(const MultiIndex& alpha, const Rational& coeff = 1);
  static Polynomial variable(std::size_t num_vars, std::size_t var);
  /// x1 + x2 + ... + xn.
  static Polynomial linear_sum(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Highest total degree of a stored monomial; 0 for the zero polynomial.
  int degree() const;
  bool contains(const MultiIndex& alpha) const { return terms_.count(alpha) != 0; }
  Rational coefficient(const MultiIndex& alpha) const;

  /// Adds coeff * x^alpha in place, dropping the term if it cancels.
  void add_term(const MultiIndex& alpha, const Rational& coeff);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& factor) const;
  Polynomial pow(unsigned exponent) const;

  /// Substitutes polynomials (all in a common number of variables) for the
  /// variables of this polynomial.
  Polynomial compose(const std::vector<Polynomial>& substitutions) const;

  bool operator==(const Polynomial& other) const {
    return num_vars_ == other.num_vars_ && terms_ == other.terms_;
  }

 private:
  void require_same_vars(const Polynomial& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;

  bool operator==(const Signature&) const = default;
};

struct RankSignature {
  std::size_t rank = 0;
  Signature signature;
};

/// Rank is the number of independent monomials; for diagonal Hermitian forms
/// the signature is read off the coefficient signs.
RankSignature rank_and_signature(const Polynomial& g);

bool has_nonnegative_coefficients(const Polynomial& g);

/// Substitutes x_n = 1 - x_1 - ... - x_{n-1} and expands in n - 1 variables.
Polynomial restrict_to_hyperplane(const Polynomial& g);

/// True iff g(x) = 1 whenever x_1 + ... + x_n = 1.
bool satisfies_hyperplane_identity(const Polynomial& g);

}  // namespace invmaps
