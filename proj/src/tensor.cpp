#include "invmaps/tensor.hpp"

#include <numeric>
#include <stdexcept>

#include "invmaps/errors.hpp"
#include "invmaps/poly_io.hpp"

namespace invmaps {

Polynomial tensor_at(const Polynomial& g, const MultiIndex& alpha, const Rational& s, const Polynomial& f) {
  if (sgn(s) <= 0 || s > 1) throw DomainError("tensor fraction must lie in (0, 1], got " + s.get_str());
  if (alpha.size() != g.num_vars()) throw DomainError("target monomial has the wrong number of variables");
  auto it = g.terms().find(alpha);
  if (it == g.terms().end()) {
    throw DomainError("monomial " + format_monomial(alpha) + " is not in the support");
  }
  if (sgn(it->second) <= 0) {
    throw DomainError("monomial " + format_monomial(alpha) + " has a non-positive coefficient");
  }
  const Rational moved = s * it->second;
  Polynomial out = g;
  out.add_term(alpha, -moved);
  for (const auto& [beta, c] : f.terms()) out.add_term(alpha + beta, moved * c);
  return out;
}

std::optional<MultiIndex> pure_top_power(const Polynomial& g) {
  if (g.is_zero() || g.num_vars() == 0) return std::nullopt;
  auto alpha = MultiIndex::pure_power(g.num_vars(), 0, g.degree());
  if (!g.contains(alpha)) return std::nullopt;
  return alpha;
}

namespace {

MultiIndex require_top_power(const Polynomial& g) {
  auto alpha = pure_top_power(g);
  if (!alpha) {
    throw DomainError("polynomial has no pure x1^" + std::to_string(g.degree()) + " term at its total degree");
  }
  return *alpha;
}

}  // namespace

Polynomial op_V(const Polynomial& g, const Polynomial& f) {
  return tensor_at(g, require_top_power(g), Rational(1, 2), f);
}

Polynomial op_W(const Polynomial& g, const Polynomial& f) {
  return tensor_at(g, require_top_power(g), 1, f);
}

std::optional<std::pair<long long, long long>> postage_stamp_decompose(long long m, long long a, long long b) {
  if (a <= 0 || b <= 0) throw DomainError("postage denominations must be positive");
  if (std::gcd(a, b) != 1) {
    throw DomainError("postage denominations " + std::to_string(a) + " and " + std::to_string(b) +
                      " are not coprime");
  }
  if (m < 0) return std::nullopt;
  // j ranges over one full residue period; j A == M (mod B) fixes j mod B.
  for (long long j = 0; j < b && j * a <= m; ++j) {
    if ((m - j * a) % b == 0) return std::make_pair(j, (m - j * a) / b);
  }
  return std::nullopt;
}

long long thm1_guaranteed_rank(long long n_gamma) { return n_gamma * n_gamma - 2 * n_gamma + 2; }

namespace {

struct TraceBuilder {
  ConstructionTrace trace;
  Polynomial f;

  TraceBuilder(const DiagonalCyclicGroup& group, Polynomial f_gamma) : f(std::move(f_gamma)) {
    trace.group = group;
    trace.result = f;
    trace.rank_after_each_step.push_back(f.size());
  }

  void apply(const MultiIndex& alpha, const Rational& s) {
    trace.result = tensor_at(trace.result, alpha, s, f);
    trace.steps.push_back({alpha, s});
    trace.rank_after_each_step.push_back(trace.result.size());
  }

  std::size_t rank() const { return trace.result.size(); }

  void expect_rank(long long expected, const char* stage) const {
    if (static_cast<long long>(rank()) != expected) {
      throw std::logic_error(std::string(stage) + ": rank " + std::to_string(rank()) + ", expected " +
                             std::to_string(expected));
    }
  }
};

Polynomial admissible_f_gamma(const DiagonalCyclicGroup& group, AdmissibilityClass& cls) {
  cls = classify_admissible(group);
  if (!cls.admissible()) throw DomainError("group is not admissible");
  return canonical_polynomial(group).f_gamma;
}

}  // namespace

ConstructionTrace construct_thm1(const DiagonalCyclicGroup& group, long long target_rank) {
  AdmissibilityClass cls;
  TraceBuilder b(group, admissible_f_gamma(group, cls));
  const auto n_gamma = static_cast<long long>(b.rank());
  if (n_gamma < 2) throw DomainError("tensoring construction needs N(Gamma) >= 2");
  if (target_rank < n_gamma) {
    throw DomainError("target rank " + std::to_string(target_rank) + " is below N(Gamma) = " +
                      std::to_string(n_gamma));
  }
  auto jk = postage_stamp_decompose(target_rank - n_gamma, n_gamma, n_gamma - 1);
  if (!jk) {
    throw DomainError("rank " + std::to_string(target_rank) + " - " + std::to_string(n_gamma) +
                      " is not a non-negative combination of " + std::to_string(n_gamma) + " and " +
                      std::to_string(n_gamma - 1) + " (guaranteed from " +
                      std::to_string(thm1_guaranteed_rank(n_gamma)) + ")");
  }
  const auto [j, k] = *jk;
  for (long long i = 0; i < k; ++i) {
    const auto before = static_cast<long long>(b.rank());
    b.apply(require_top_power(b.trace.result), 1);
    b.expect_rank(before + n_gamma - 1, "W step");
  }
  for (long long i = 0; i < j; ++i) {
    const auto before = static_cast<long long>(b.rank());
    b.apply(require_top_power(b.trace.result), Rational(1, 2));
    b.expect_rank(before + n_gamma, "V step");
  }
  b.expect_rank(target_rank, "construction");
  return b.trace;
}

ConstructionTrace construct_thm2(const DiagonalCyclicGroup& group, long long target_rank) {
  if (group.dimension() != 2) throw DomainError("the two-variable construction needs a group acting on C^2");
  AdmissibilityClass cls;
  TraceBuilder b(group, admissible_f_gamma(group, cls));
  const int p = group.order();
  const auto n_gamma = static_cast<long long>(b.rank());

  // Coordinate roles after normalization: x carries weight 1 (either one for
  // scalar groups), y the other coordinate.
  std::size_t xv = 0;
  if (cls.tag == Admissibility::TwoBlock && cls.coordinate_roles[0] != 1) xv = 1;
  const std::size_t yv = 1 - xv;
  const bool two_block = cls.tag == Admissibility::TwoBlock;
  auto mono = [&](int xe, int ye) {
    std::vector<int> e(2, 0);
    e[xv] = xe;
    e[yv] = ye;
    return MultiIndex(std::move(e));
  };

  if (target_rank < 2 * n_gamma - 1) {
    throw DomainError("target rank " + std::to_string(target_rank) + " is below 2 N(Gamma) - 1 = " +
                      std::to_string(2 * n_gamma - 1));
  }

  // Base polynomial g_i of rank 2N - 2 + i, 1 <= i <= N - 1, then d extra
  // multiplications at x^{2p}, x^{3p}, ...
  const long long offset = target_rank - (2 * n_gamma - 2);
  long long i = 0;
  long long d = 0;
  if (target_rank <= 3 * n_gamma - 3) {
    i = offset;
  } else {
    const long long period = n_gamma - 1;
    i = ((offset - 1) % period) + 1;
    long long matches = 0;
    for (long long cand = 1; cand <= period; ++cand) matches += ((offset - cand) % period == 0) ? 1 : 0;
    if (matches != 1) throw std::logic_error("residue representative is not unique");
    d = (offset - i) / period;
    if (d < 1) throw std::logic_error("iteration count must be positive above 3N - 3");
  }

  b.apply(mono(p, 0), 1);
  b.expect_rank(2 * n_gamma - 1, "g_1");
  if (i >= 2) {
    // Gamma(p,1): multiply c_i x^{p-i} y^i.  Gamma(p,2): multiply c_j x^{p-2j} y^j, j = i - 1.
    const MultiIndex target = two_block ? mono(p - 2 * static_cast<int>(i - 1), static_cast<int>(i - 1))
                                        : mono(p - static_cast<int>(i), static_cast<int>(i));
    b.apply(target, 1);
    b.expect_rank(2 * n_gamma - 2 + i, "g_j");
  }
  for (long long step = 1; step <= d; ++step) {
    const auto before = static_cast<long long>(b.rank());
    b.apply(mono(static_cast<int>((step + 1) * p), 0), 1);
    b.expect_rank(before + n_gamma - 1, "top-power iteration");
  }
  b.expect_rank(target_rank, "construction");
  return b.trace;
}

ConstructionTrace replay_steps(const DiagonalCyclicGroup& group, const std::vector<TensorStep>& steps) {
  TraceBuilder b(group, canonical_polynomial(group).f_gamma);
  for (const auto& step : steps) b.apply(step.target, step.fraction);
  return b.trace;
}

}  // namespace invmaps
