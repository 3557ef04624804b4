#include "invmaps/canonical.hpp"

#include <cmath>
#include <complex>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "invmaps/cyclotomic.hpp"
#include "invmaps/errors.hpp"

namespace invmaps {

namespace {

using CycTerms = std::map<MultiIndex, CyclotomicInteger>;

void add_cyc(CycTerms& terms, const MultiIndex& alpha, const CyclotomicInteger& c) {
  auto it = terms.find(alpha);
  if (it == terms.end()) {
    if (!c.is_zero()) terms.emplace(alpha, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms.erase(it);
}

// Composition check for two-block groups: f_Gamma is f_{p,2} evaluated at the
// block sums of the weight-1 and weight-2 coordinates.
Polynomial two_block_composition(const DiagonalCyclicGroup& group, const AdmissibilityClass& cls) {
  const std::size_t n = group.dimension();
  Polynomial ones(n);
  Polynomial twos(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto& block = cls.coordinate_roles[j] == 1 ? ones : twos;
    block.add_term(MultiIndex::pure_power(n, j, 1), 1);
  }
  return closed_form(ClosedFormFamily::Gp2, group.order()).compose({ones, twos});
}

}  // namespace

CanonicalResult canonical_polynomial(const DiagonalCyclicGroup& group) {
  if (!group.fixed_point_free()) {
    throw DomainError("canonical polynomial needs a fixed-point-free group; order " +
                      std::to_string(group.order()) + " has a weight sharing a factor with it");
  }
  const int p = group.order();
  const std::size_t n = group.dimension();
  const MultiIndex origin(n);

  std::vector<MultiIndex> unit_vectors;
  for (std::size_t j = 0; j < n; ++j) unit_vectors.push_back(MultiIndex::pure_power(n, j, 1));

  // prod_{k} (1 - sum_j t^{k a_j} x_j), reduced after every step.
  CycTerms product;
  product.emplace(origin, CyclotomicInteger::from_integer(p, 1));
  for (int k = 0; k < p; ++k) {
    CycTerms next = product;
    for (const auto& [alpha, c] : product) {
      for (std::size_t j = 0; j < n; ++j) {
        const int e = static_cast<int>((static_cast<long long>(k) * group.weights()[j]) % p);
        add_cyc(next, alpha + unit_vectors[j], -c.times_root_power(e));
      }
    }
    product = std::move(next);
  }

  CanonicalResult out{group, Polynomial(n), 0, {}};
  for (const auto& [alpha, c] : product) {
    if (!c.is_rational_integer()) {
      throw std::logic_error("canonical expansion produced a non-integer coefficient");
    }
    if (alpha.degree() == 0) {
      // 1 - prod has constant term 1 - 1.
      if (c.constant_term() != 1) throw std::logic_error("product constant term is not 1");
      continue;
    }
    out.f_gamma.add_term(alpha, Rational(-c.constant_term()));
  }

  if (group.order() > 1) {
    const auto cls = classify_admissible(group);
    if (cls.tag == Admissibility::TwoBlock &&
        two_block_composition(group, cls) != out.f_gamma) {
      throw std::logic_error("two-block composition disagrees with the product expansion");
    }
  }

  const auto rs = rank_and_signature(out.f_gamma);
  out.n_gamma = rs.rank;
  out.signature = rs.signature;
  return out;
}

std::map<MultiIndex, double, GradedLexGreater> canonical_float_oracle(const DiagonalCyclicGroup& group) {
  const int p = group.order();
  if (p > 64) throw DomainError("float oracle is limited to p <= 64");
  const std::size_t n = group.dimension();
  using Complex = std::complex<double>;

  std::map<MultiIndex, Complex> product;
  product.emplace(MultiIndex(n), Complex(1.0, 0.0));
  for (int k = 0; k < p; ++k) {
    std::map<MultiIndex, Complex> next = product;
    for (const auto& [alpha, c] : product) {
      for (std::size_t j = 0; j < n; ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) *
                             static_cast<double>(group.weights()[j]) / static_cast<double>(p);
        next[alpha + MultiIndex::pure_power(n, j, 1)] -= c * std::polar(1.0, angle);
      }
    }
    product = std::move(next);
  }

  std::map<MultiIndex, double, GradedLexGreater> out;
  for (const auto& [alpha, c] : product) {
    const double value = alpha.degree() == 0 ? 1.0 - c.real() : -c.real();
    if (std::abs(value) > 1e-9) out.emplace(alpha, value);
  }
  return out;
}

Polynomial round_to_polynomial(const std::map<MultiIndex, double, GradedLexGreater>& approx,
                               std::size_t num_vars) {
  Polynomial out(num_vars);
  for (const auto& [alpha, v] : approx) out.add_term(alpha, Rational(static_cast<long>(std::llround(v))));
  return out;
}

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

Polynomial closed_form(ClosedFormFamily family, int p) {
  Polynomial out(2);
  if (family == ClosedFormFamily::Gp1) {
    if (p < 1) throw DomainError("f_{p,1} needs p >= 1");
    for (int k = 0; k <= p; ++k) {
      out.add_term(MultiIndex{p - k, k}, Rational(binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(k))));
    }
    return out;
  }
  if (p < 3 || p % 2 == 0) throw DomainError("f_{p,2} needs an odd p >= 3, got " + std::to_string(p));
  out.add_term(MultiIndex{p, 0}, 1);
  out.add_term(MultiIndex{0, p}, 1);
  for (int k = 1; k <= (p - 1) / 2; ++k) {
    Rational c(mpz_class(p) * binomial(static_cast<unsigned long>(p - k), static_cast<unsigned long>(k)),
               mpz_class(p - k));
    c.canonicalize();
    out.add_term(MultiIndex{p - 2 * k, k}, c);
  }
  return out;
}

std::string MapComponent::display_coefficient() const {
  std::ostringstream os;
  os << std::setprecision(12) << std::sqrt(squared_coeff.get_d());
  return os.str();
}

std::vector<MapComponent> extract_map(const Polynomial& g) {
  std::vector<MapComponent> out;
  out.reserve(g.size());
  for (const auto& [alpha, c] : g.terms()) {
    out.push_back({abs(c), alpha, sgn(c) > 0 ? MapSide::F : MapSide::G});
  }
  return out;
}

}  // namespace invmaps
