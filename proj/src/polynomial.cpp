#include "invmaps/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace invmaps {

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& value) {
  Polynomial out(num_vars);
  out.add_term(MultiIndex(num_vars), value);
  return out;
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, const Rational& coeff) {
  Polynomial out(alpha.size());
  out.add_term(alpha, coeff);
  return out;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t var) {
  return monomial(MultiIndex::pure_power(num_vars, var, 1));
}

Polynomial Polynomial::linear_sum(std::size_t num_vars) {
  Polynomial out(num_vars);
  for (std::size_t j = 0; j < num_vars; ++j) {
    out.add_term(MultiIndex::pure_power(num_vars, j, 1), 1);
  }
  return out;
}

int Polynomial::degree() const {
  // Graded order puts a top-degree term first.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Rational Polynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& alpha, const Rational& coeff) {
  if (alpha.size() != num_vars_) {
    throw std::invalid_argument("monomial has " + std::to_string(alpha.size()) +
                                " variables, polynomial has " + std::to_string(num_vars_));
  }
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_vars(const Polynomial& other) const {
  if (other.num_vars_ != num_vars_) {
    throw std::invalid_argument("polynomials have different numbers of variables (" +
                                std::to_string(num_vars_) + " vs " +
                                std::to_string(other.num_vars_) + ")");
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_vars(other);
  Polynomial out = *this;
  for (const auto& [alpha, c] : other.terms_) out.add_term(alpha, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_vars(other);
  Polynomial out = *this;
  for (const auto& [alpha, c] : other.terms_) out.add_term(alpha, -c);
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_vars(other);
  Polynomial out(num_vars_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) out.add_term(a + b, ca * cb);
  }
  return out;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  Polynomial out(num_vars_);
  if (sgn(factor) == 0) return out;
  for (const auto& [alpha, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), alpha, c * factor);
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(num_vars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& substitutions) const {
  if (substitutions.size() != num_vars_) {
    throw std::invalid_argument("compose needs one substitution per variable");
  }
  const std::size_t target_vars = substitutions.front().num_vars();
  Polynomial out(target_vars);
  for (const auto& [alpha, c] : terms_) {
    Polynomial term = constant(target_vars, c);
    for (std::size_t j = 0; j < num_vars_; ++j) {
      if (alpha[j] > 0) term = term * substitutions[j].pow(static_cast<unsigned>(alpha[j]));
    }
    out = out + term;
  }
  return out;
}

RankSignature rank_and_signature(const Polynomial& g) {
  RankSignature out;
  out.rank = g.size();
  for (const auto& [alpha, c] : g.terms()) {
    if (sgn(c) > 0) {
      ++out.signature.n_plus;
    } else {
      ++out.signature.n_minus;
    }
  }
  return out;
}

bool has_nonnegative_coefficients(const Polynomial& g) {
  for (const auto& [alpha, c] : g.terms()) {
    if (sgn(c) < 0) return false;
  }
  return true;
}

namespace {

// Integer-coefficient scratch polynomial for the Horner pass. Working over Z
// after clearing denominators avoids a gcd per rational operation.
using IntTerms = std::map<MultiIndex, mpz_class, GradedLexGreater>;

void add_int(IntTerms& terms, const MultiIndex& alpha, const mpz_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

// p * (1 - x_1 - ... - x_m)
IntTerms times_hyperplane_linear(const IntTerms& p, std::size_t m) {
  IntTerms out = p;
  for (const auto& [alpha, c] : p) {
    for (std::size_t i = 0; i < m; ++i) {
      add_int(out, alpha + MultiIndex::pure_power(m, i, 1), -c);
    }
  }
  return out;
}

}  // namespace

Polynomial restrict_to_hyperplane(const Polynomial& g) {
  const std::size_t n = g.num_vars();
  if (n == 0) throw std::invalid_argument("restriction needs at least one variable");
  const std::size_t m = n - 1;

  mpz_class denom = 1;
  for (const auto& [alpha, c] : g.terms()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());

  // Slice g by the exponent of the eliminated variable: g = sum_k g_k x_n^k.
  std::map<int, IntTerms> slices;
  for (const auto& [alpha, c] : g.terms()) {
    mpz_class scaled = c.get_num() * (denom / c.get_den());
    add_int(slices[alpha[m]], alpha.without_last(), scaled);
  }

  IntTerms acc;
  int k = slices.empty() ? 0 : slices.rbegin()->first;
  for (; k >= 0; --k) {
    if (!acc.empty()) acc = times_hyperplane_linear(acc, m);
    if (auto it = slices.find(k); it != slices.end()) {
      for (const auto& [alpha, c] : it->second) add_int(acc, alpha, c);
    }
  }

  Polynomial out(m);
  for (const auto& [alpha, c] : acc) {
    Rational coeff(c, denom);
    coeff.canonicalize();
    out.add_term(alpha, coeff);
  }
  return out;
}

bool satisfies_hyperplane_identity(const Polynomial& g) {
  return restrict_to_hyperplane(g) == Polynomial::constant(g.num_vars() - 1, 1);
}

}  // namespace invmaps
