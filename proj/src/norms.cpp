#include "slender/norms.hpp"

#include <algorithm>
#include <stdexcept>

namespace slender {

long long dudley_norm(const GPElement& a) {
  if (!a.context()) throw std::invalid_argument("detached element");
  long long total = 0;
  for (const Syllable& s : a.syllables()) total += a.context()->group(s.vertex).norm(s.element);
  return total;
}

long long syllable_length(const GPElement& a) {
  return static_cast<long long>(a.syllables().size());
}

long long kernel_sigma_norm(const GPElement& a) {
  if (!in_sigma_kernel(a))
    throw std::invalid_argument("kernel_sigma_norm: element \"" + a.str() +
                                "\" is not in ker(sigma)");
  return syllable_length(a);
}

LengthFunctionReport verify_dudley(const NormFn& norm, std::span<const GPElement> elements,
                                   long long n_max) {
  LengthFunctionReport report;
  report.samples = elements.size();
  if (elements.empty()) return report;

  std::vector<GPElement> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const GPElement& x, const GPElement& y) { return x.str() < y.str(); });

  const GPElement one = identity(sorted.front().context());
  if (const long long l1 = norm(one); l1 != 0)
    report.violations.push_back({"identity", one.str(), 0, l1, 0});

  for (const GPElement& a : sorted) {
    const long long la = norm(a);
    const long long linv = norm(invert(a));
    if (la != linv) report.violations.push_back({"symmetry", a.str(), 0, la, linv});
  }
  for (const GPElement& a : sorted) {
    const long long la = norm(a);
    for (const GPElement& b : sorted) {
      const long long lab = norm(multiply(a, b));
      const long long bound = la + norm(b);
      if (lab > bound)
        report.violations.push_back({"triangle", a.str() + " | " + b.str(), 0, lab, bound});
    }
  }
  for (const GPElement& a : sorted) {
    if (a.is_identity()) continue;
    const long long la = norm(a);
    for (long long n = 1; n <= n_max; ++n) {
      const long long lan = norm(power(a, n));
      const long long bound = std::max(n, la);
      if (lan < bound) report.violations.push_back({"power", a.str(), n, lan, bound});
    }
  }
  return report;
}

}  // namespace slender
