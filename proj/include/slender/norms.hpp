#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "slender/gp.hpp"

namespace slender {

using NormFn = std::function<long long(const GPElement&)>;

struct NormViolation {
  std::string clause;   // "identity", "symmetry", "triangle" or "power"
  std::string element;  // serialized element ("a | b" for pair clauses)
  long long n = 0;      // exponent, for the power clause
  long long lhs = 0;
  long long rhs = 0;
};

struct LengthFunctionReport {
  std::size_t samples = 0;
  std::vector<NormViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Sum of the vertex norms over the canonical syllables. Requires every
/// vertex group of the context to carry a Dudley norm.
long long dudley_norm(const GPElement& a);

/// Number of syllables of the canonical form.
long long syllable_length(const GPElement& a);

/// Syllable count, admissible as a Dudley norm only on ker sigma; throws
/// when the argument has a nontrivial sigma image.
long long kernel_sigma_norm(const GPElement& a);

/// Checks L(1) = 0, L(g) = L(g^-1), L(gh) <= L(g) + L(h) on all pairs,
/// and L(g^n) >= max{n, L(g)} for 1 <= n <= n_max on every non-identity
/// sample. The identity is exempt from the power clause.
LengthFunctionReport verify_dudley(const NormFn& norm, std::span<const GPElement> elements,
                                   long long n_max);

}  // namespace slender
