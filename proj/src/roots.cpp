#include "slender/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "slender/norms.hpp"

namespace slender {

std::vector<RootEntry> roots(const GPElement& g) {
  if (!g.context()) throw std::invalid_argument("detached element");
  if (g.is_identity()) return {{g, {1}}};

  const long long lg = dudley_norm(g);
  const long long n_max = std::max<long long>(1, lg);
  std::vector<RootEntry> out;
  for (const GPElement& h : ball(g.context(), lg)) {
    if (h.is_identity()) continue;
    std::vector<long long> exps;
    GPElement cur = h;
    for (long long n = 1; n <= n_max; ++n) {
      if (n > 1) cur = multiply(cur, h);
      if (cur == g) exps.push_back(n);
    }
    if (!exps.empty()) out.push_back({h, std::move(exps)});
  }
  return out;  // ball order is already (norm, serialization)
}

long long power_free_bound(std::span<const GPElement> xs) {
  long long max_exp = 0;
  for (const GPElement& x : xs) {
    if (x.is_identity()) continue;  // torsion-free: nothing powers to e
    for (const RootEntry& r : roots(x))
      if (!r.exponents.empty()) max_exp = std::max(max_exp, r.exponents.back());
  }
  return 1 + max_exp;
}

std::vector<GPElement> roots_closure(const GPElement& g, std::vector<GPElement> xs,
                                     long long depth) {
  if (!g.context()) throw std::invalid_argument("detached element");
  if (depth < 0) throw std::invalid_argument("roots_closure depth must be >= 0");
  const GPElement ginv = invert(g);

  auto translate = [&](const std::vector<GPElement>& set) {
    std::set<GPElement> dedup;
    for (const GPElement& x : set) dedup.insert(multiply(ginv, x));
    return std::vector<GPElement>(dedup.begin(), dedup.end());
  };

  std::vector<GPElement> cur = translate(xs);
  for (long long step = 0; step < depth; ++step) {
    std::set<GPElement> bases;
    for (const GPElement& s : cur)
      for (const RootEntry& r : roots(s)) bases.insert(r.base);
    cur = translate(std::vector<GPElement>(bases.begin(), bases.end()));
  }
  std::sort(cur.begin(), cur.end(), [](const GPElement& x, const GPElement& y) {
    const long long nx = dudley_norm(x), ny = dudley_norm(y);
    if (nx != ny) return nx < ny;
    return x.str() < y.str();
  });
  return cur;
}

}  // namespace slender
