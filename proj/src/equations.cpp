#include "slender/equations.hpp"

#include <algorithm>

#include "slender/norms.hpp"

namespace slender {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in cascade arithmetic");
  return r;
}

}  // namespace

std::vector<long long> cyclic_symbolic_solve(long long j, const std::vector<long long>& k) {
  if (j < 1) throw std::invalid_argument("cyclic_symbolic_solve: j must be >= 1");
  if (k.empty()) throw std::invalid_argument("cyclic_symbolic_solve: empty exponent sequence");
  for (long long km : k)
    if (km < 1) throw std::invalid_argument("cyclic_symbolic_solve: exponents must be >= 1");

  long long K = 1;
  for (long long km : k) K = checked_mul(K, km);

  std::vector<long long> e;
  e.reserve(k.size() + 1);
  e.push_back(K);
  const long long jK = checked_mul(j, K);
  for (std::size_t m = 0; m < k.size(); ++m) {
    const long long num = e.back() - jK;
    if (num % k[m] != 0)
      throw std::logic_error("cyclic_symbolic_solve: recurrence division not exact");
    e.push_back(num / k[m]);
  }

  // Cross-check the closed form for the tail entry.
  long long partial = 1, sum = 1;
  for (std::size_t m = 0; m + 1 < k.size(); ++m) {
    partial = checked_mul(partial, k[m]);
    sum += partial;
  }
  if (e.back() != 1 - checked_mul(j, sum))
    throw std::logic_error("cyclic_symbolic_solve: closed form mismatch");
  return e;
}

std::optional<std::vector<GPElement>> bounded_solve(const EquationSystem<GPElement>& sys,
                                                    const GPElement& b0, long long radius,
                                                    bool use_norm_pruning) {
  sys.validate();
  if (!b0.context()) throw std::invalid_argument("detached element");
  const ContextPtr& ctx = b0.context();
  const std::size_t M = sys.depth();
  const long long lb0 = dudley_norm(b0);

  for (const GPElement& candidate : ball(ctx, radius)) {
    std::vector<GPElement> chain(sys.exponents.size() + 1, identity(ctx));
    chain[M + 1] = candidate;
    bool viable = true;
    for (std::size_t m = M + 1; m-- > 0;) {
      const long long budget = (m == 0 ? lb0 : radius) + dudley_norm(sys.coefficients[m]);
      if (use_norm_pruning && !chain[m + 1].is_identity() && sys.exponents[m] > budget) {
        // L(b_{m+1}^{k_m}) >= k_m would already overshoot the target norm.
        viable = false;
        break;
      }
      chain[m] = multiply(sys.coefficients[m], power(chain[m + 1], sys.exponents[m]));
      if (m > 0 && dudley_norm(chain[m]) > radius) {
        viable = false;
        break;
      }
    }
    if (viable && chain[0] == b0) {
      chain[0] = b0;
      return chain;
    }
  }
  return std::nullopt;
}

}  // namespace slender
