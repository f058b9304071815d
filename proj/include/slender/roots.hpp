#pragma once

#include <span>
#include <vector>

#include "slender/gp.hpp"

namespace slender {

struct RootEntry {
  GPElement base;
  std::vector<long long> exponents;  // ascending, each n has base^n = g
};

/// Complete root set of g: every h with h^n = g for some n >= 1. The
/// Dudley clause bounds any root by L(h) <= L(g) and n <= max{1, L(g)},
/// so the search over ball(L(g)) is exhaustive. Entries are sorted by
/// (norm, serialization); g itself appears with exponent 1.
std::vector<RootEntry> roots(const GPElement& g);

/// Least p >= 1 such that h^k lands outside X for every k >= p and every
/// h != e; equals 1 + the largest root exponent occurring over X, and 1
/// when X has no non-identity member.
long long power_free_bound(std::span<const GPElement> xs);

/// Iterated translated root closure:
///   depth 0:  g^-1 X
///   depth m:  g^-1 Roots(g^-1 Roots( ... g^-1 X ...))  (Roots applied m times)
/// where Roots of a set collects the root bases of its members.
std::vector<GPElement> roots_closure(const GPElement& g, std::vector<GPElement> xs,
                                     long long depth);

}  // namespace slender
