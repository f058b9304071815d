#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "slender/gp.hpp"

namespace slender {

/// The cascade y_m = a_m * y_{m+1}^{k_m} for 0 <= m <= M, over any group
/// with multiplication, pow and equality.
template <class Elem>
struct EquationSystem {
  std::vector<Elem> coefficients;    // a_0 .. a_M
  std::vector<long long> exponents;  // k_0 .. k_M, all >= 1

  std::size_t depth() const { return exponents.empty() ? 0 : exponents.size() - 1; }

  void validate() const {
    if (coefficients.size() != exponents.size())
      throw std::invalid_argument("equation system: coefficient/exponent length mismatch");
    if (exponents.empty()) throw std::invalid_argument("equation system: no equations");
    for (long long k : exponents)
      if (k < 1) throw std::invalid_argument("equation system: exponents must be >= 1");
  }
};

/// System with the constant coefficient a_m = g^j.
template <class Elem>
EquationSystem<Elem> constant_system(const Elem& g, long long j, std::vector<long long> k) {
  if (j < 1) throw std::invalid_argument("constant_system: j must be >= 1");
  EquationSystem<Elem> sys;
  const Elem gj = pow(g, j);
  sys.coefficients.assign(k.size(), gj);
  sys.exponents = std::move(k);
  sys.validate();
  return sys;
}

struct CheckOutcome {
  bool ok;
  long long failing_index;  // least failing m, or -1
};

/// Verifies b_m = a_m * b_{m+1}^{k_m} for all m; the tuple has M + 2 entries.
template <class Elem>
CheckOutcome check_solution(const EquationSystem<Elem>& sys, const std::vector<Elem>& sol) {
  sys.validate();
  if (sol.size() != sys.exponents.size() + 1)
    throw std::invalid_argument("solution tuple length mismatch");
  for (std::size_t m = 0; m < sys.exponents.size(); ++m) {
    const Elem rhs = sys.coefficients[m] * pow(sol[m + 1], sys.exponents[m]);
    if (!(rhs == sol[m])) return {false, static_cast<long long>(m)};
  }
  return {true, -1};
}

/// Exponent tuple e_0..e_{M+1} with e_0 = K = k_0...k_M and
/// e_m = j*K + k_m * e_{m+1}; then b_m = h^{e_m} solves the cascade with
/// a_m = g^j whenever h^K = g. Every division in the backward recurrence
/// is exact, and e_{M+1} equals 1 - j(1 + k_0 + k_0 k_1 + ... + k_0...k_{M-1}).
std::vector<long long> cyclic_symbolic_solve(long long j, const std::vector<long long>& k);

/// Exhaustive finite refutation: tries every candidate for b_{M+1} in
/// ball(radius) in (norm, serialization) order, walking the forward-
/// determined chain down to b_0. Returns the first full tuple whose
/// middle entries b_1..b_M also stay inside the ball and whose b_0
/// matches, or nullopt when no such tuple exists. The norm pruning step
/// discards candidates via L(c^k) >= max{k, L(c)} and never changes the
/// verdict.
std::optional<std::vector<GPElement>> bounded_solve(const EquationSystem<GPElement>& sys,
                                                    const GPElement& b0, long long radius,
                                                    bool use_norm_pruning = true);

}  // namespace slender
