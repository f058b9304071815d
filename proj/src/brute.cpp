#include "slender/brute.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "slender/norms.hpp"

namespace slender::brute {

namespace {

bool commuting_pair(const GroupContext& ctx, const Syllable& a, const Syllable& b) {
  return a.vertex != b.vertex && ctx.graph().adjacent(a.vertex, b.vertex);
}

std::vector<Word> neighbors(const GroupContext& ctx, const Word& w) {
  std::vector<Word> out;
  for (std::size_t t = 0; t + 1 < w.size(); ++t) {
    if (commuting_pair(ctx, w[t], w[t + 1])) {
      Word next = w;
      std::swap(next[t], next[t + 1]);
      out.push_back(std::move(next));
    }
    if (w[t].vertex == w[t + 1].vertex) {
      Word next = w;
      next[t].element = ctx.group(w[t].vertex).multiply(w[t].element, w[t + 1].element);
      next.erase(next.begin() + static_cast<long>(t) + 1);
      out.push_back(std::move(next));
    }
  }
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (ctx.group(w[t].vertex).is_identity(w[t].element)) {
      Word next = w;
      next.erase(next.begin() + static_cast<long>(t));
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

std::set<Word> closure(const GroupContext& ctx, const Word& w, std::size_t cap) {
  std::set<Word> seen;
  std::deque<Word> queue;
  Word start = w;
  for (Syllable& s : start) s.element = ctx.group(s.vertex).canon(s.element);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const Word cur = std::move(queue.front());
    queue.pop_front();
    for (Word& next : neighbors(ctx, cur))
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw std::runtime_error("closure exceeded its safety cap");
        queue.push_back(std::move(next));
      }
  }
  return seen;
}

bool words_equal(const GroupContext& ctx, const Word& a, const Word& b) {
  const std::set<Word> ca = closure(ctx, a);
  const std::set<Word> cb = closure(ctx, b);
  const std::set<Word>& small = ca.size() <= cb.size() ? ca : cb;
  const std::set<Word>& large = ca.size() <= cb.size() ? cb : ca;
  for (const Word& x : small)
    if (large.count(x)) return true;
  return false;
}

std::vector<Word> minimal_words(const GroupContext& ctx, const Word& w) {
  const std::set<Word> all = closure(ctx, w);
  std::size_t best = SIZE_MAX;
  for (const Word& x : all) best = std::min(best, x.size());
  std::vector<Word> out;
  for (const Word& x : all)
    if (x.size() == best) out.push_back(x);
  return out;
}

Word random_word(const GroupContext& ctx, Rng& rng, int max_syllables, long long max_exp) {
  std::uniform_int_distribution<int> len(0, max_syllables);
  std::uniform_int_distribution<int> vert(0, static_cast<int>(ctx.size()) - 1);
  std::uniform_int_distribution<long long> exp(-max_exp, max_exp);
  Word w;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back({vert(rng), exp(rng)});
  return w;
}

Word mutate_word(const GroupContext& ctx, const Word& w, Rng& rng, int moves) {
  Word cur = w;
  for (Syllable& s : cur) s.element = ctx.group(s.vertex).canon(s.element);
  std::uniform_int_distribution<int> which(0, 3);
  for (int step = 0; step < moves; ++step) {
    switch (which(rng)) {
      case 0: {  // a forward elementary move
        auto opts = neighbors(ctx, cur);
        if (!opts.empty())
          cur = opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)];
        break;
      }
      case 1: {  // split one syllable in two
        if (cur.empty()) break;
        const std::size_t t =
            std::uniform_int_distribution<std::size_t>(0, cur.size() - 1)(rng);
        const VertexGroup& vg = ctx.group(cur[t].vertex);
        const VElem part = vg.canon(std::uniform_int_distribution<long long>(-2, 2)(rng));
        const VElem rest = vg.multiply(cur[t].element, vg.invert(part));
        Word next = cur;
        next[t].element = part;
        next.insert(next.begin() + static_cast<long>(t) + 1, {cur[t].vertex, rest});
        cur = std::move(next);
        break;
      }
      case 2: {  // insert a trivial syllable
        const std::size_t t = std::uniform_int_distribution<std::size_t>(0, cur.size())(rng);
        const int v =
            std::uniform_int_distribution<int>(0, static_cast<int>(ctx.size()) - 1)(rng);
        cur.insert(cur.begin() + static_cast<long>(t), {v, ctx.group(v).identity()});
        break;
      }
      default: {  // swap back an adjacent commuting pair
        for (std::size_t t = 0; t + 1 < cur.size(); ++t)
          if (commuting_pair(ctx, cur[t], cur[t + 1])) {
            std::swap(cur[t], cur[t + 1]);
            break;
          }
        break;
      }
    }
    if (cur.size() > 8) break;  // keep downstream closures tractable
  }
  return cur;
}

std::vector<RootEntry> naive_roots(const GPElement& g, long long radius, long long exponent_cap) {
  std::vector<RootEntry> out;
  if (g.is_identity()) {
    // Torsion-freeness makes e its own only root; exponents collapse to 1.
    return {{g, {1}}};
  }
  for (const GPElement& h : ball(g.context(), radius)) {
    if (h.is_identity()) continue;
    std::vector<long long> exps;
    GPElement cur = h;
    for (long long n = 1; n <= exponent_cap; ++n) {
      if (n > 1) cur = multiply(cur, h);
      if (cur == g) exps.push_back(n);
    }
    if (!exps.empty()) out.push_back({h, std::move(exps)});
  }
  return out;
}

std::optional<std::vector<GPElement>> enumerate_solve(const EquationSystem<GPElement>& sys,
                                                      const GPElement& b0, long long radius) {
  sys.validate();
  const ContextPtr& ctx = b0.context();
  const std::size_t M = sys.depth();
  for (const GPElement& candidate : ball(ctx, radius)) {
    std::vector<GPElement> chain(sys.exponents.size() + 1, identity(ctx));
    chain[M + 1] = candidate;
    bool inside = true;
    for (std::size_t m = M + 1; m-- > 0;) {
      chain[m] = multiply(sys.coefficients[m], power(chain[m + 1], sys.exponents[m]));
      if (m > 0 && dudley_norm(chain[m]) > radius) inside = false;
    }
    if (inside && chain[0] == b0) return chain;
  }
  return std::nullopt;
}

}  // namespace slender::brute
