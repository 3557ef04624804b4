#pragma once

#include <map>
#include <string>
#include <vector>

#include "invmaps/group.hpp"
#include "invmaps/polynomial.hpp"

namespace invmaps {

struct CanonicalResult {
  DiagonalCyclicGroup group;
  Polynomial f_gamma;
  /// N(Gamma), the rank of f_gamma.
  std::size_t n_gamma = 0;
  Signature signature;
};

/// f_Gamma(x) with x_j = |z_j|^2, obtained by expanding
/// 1 - prod_{k=0}^{p-1} (1 - sum_j w^{k a_j} x_j) over Z[w].
///
/// Throws DomainError for groups that are not fixed-point-free. Throws
/// std::logic_error if a final coefficient is not a rational integer.
CanonicalResult canonical_polynomial(const DiagonalCyclicGroup& group);

/// Same product evaluated in complex double precision with w = exp(2 pi i/p).
/// Real parts are returned unrounded; only monomials of magnitude above 1e-9
/// are kept. Cross-validation only. Requires p <= 64.
std::map<MultiIndex, double, GradedLexGreater> canonical_float_oracle(const DiagonalCyclicGroup& group);

/// Oracle output rounded to the nearest integers.
Polynomial round_to_polynomial(const std::map<MultiIndex, double, GradedLexGreater>& approx,
                               std::size_t num_vars);

enum class ClosedFormFamily { Gp1, Gp2 };

/// f_{p,1}(x,y) = (x+y)^p, or f_{p,2}(x,y) = x^p + sum_k c_k x^{p-2k} y^k + y^p
/// with c_k = p/(p-k) * C(p-k, k) for odd p >= 3.
Polynomial closed_form(ClosedFormFamily family, int p);

enum class MapSide { F, G };

/// One monomial component c_alpha z^alpha of the map; squared_coeff = |c_alpha|^2.
struct MapComponent {
  Rational squared_coeff;
  MultiIndex exponent;
  MapSide side = MapSide::F;

  /// sqrt(squared_coeff) to 12 significant digits, for display.
  std::string display_coefficient() const;
};

/// Splits g into F (positive coefficients) and G (negative) components, in
/// graded-lex order.
std::vector<MapComponent> extract_map(const Polynomial& g);

}  // namespace invmaps
