#pragma once

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "slender/equations.hpp"
#include "slender/gp.hpp"
#include "slender/roots.hpp"

namespace slender::brute {

/// Reference implementations, kept deliberately naive and independent of
/// the canonical-form engine: raw words are rewritten only by the three
/// elementary moves (swap adjacent commuting syllables, merge an adjacent
/// same-vertex pair, delete a trivial syllable).

using Rng = std::mt19937_64;

/// All raw words reachable from w by elementary moves. Finite, since
/// merges and deletions only shorten and shuffles permute.
std::set<Word> closure(const GroupContext& ctx, const Word& w, std::size_t cap = 200000);

/// Whether two raw words represent the same group element: their closures
/// both contain the full shuffle class of the reduced form, so equality
/// holds exactly when the closures intersect.
bool words_equal(const GroupContext& ctx, const Word& a, const Word& b);

/// The shortest words of the closure (the reduced forms).
std::vector<Word> minimal_words(const GroupContext& ctx, const Word& w);

/// Random raw word with at most max_syllables syllables and exponents in
/// [-max_exp, max_exp] (zero included).
Word random_word(const GroupContext& ctx, Rng& rng, int max_syllables, long long max_exp);

/// Element-preserving randomized rewrite of w: elementary moves plus
/// their inverses (syllable splits, trivial insertions).
Word mutate_word(const GroupContext& ctx, const Word& w, Rng& rng, int moves);

/// Root search with slack: every (h, n) with h in ball(radius),
/// 1 <= n <= exponent_cap and h^n = g, ignoring the Dudley bound.
std::vector<RootEntry> naive_roots(const GPElement& g, long long radius, long long exponent_cap);

/// Unpruned exhaustive version of bounded_solve, for confirming
/// no-solution verdicts.
std::optional<std::vector<GPElement>> enumerate_solve(const EquationSystem<GPElement>& sys,
                                                      const GPElement& b0, long long radius);

}  // namespace slender::brute
