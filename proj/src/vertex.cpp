#include "slender/vertex.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace slender {

std::vector<RootPair> integer_roots(long long k) {
  if (k == 0) return {{0, 1}};
  std::vector<RootPair> out;
  const long long a = std::llabs(k);
  for (long long n = 1; n <= a; ++n)
    if (a % n == 0) out.push_back({k / n, n});
  std::sort(out.begin(), out.end(),
            [](const RootPair& x, const RootPair& y) { return x.exponent < y.exponent; });
  return out;
}

VertexGroup VertexGroup::cyclic(long long modulus) {
  if (modulus < 2)
    throw std::invalid_argument("cyclic vertex group needs modulus >= 2");
  return VertexGroup(modulus);
}

VertexGroup VertexGroup::from_tag(std::string_view tag) {
  if (tag == "Z") return integers();
  if (tag.rfind("Z/", 0) == 0) {
    const std::string digits(tag.substr(2));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad vertex group tag \"" + std::string(tag) + "\"");
    return cyclic(std::stoll(digits));
  }
  throw std::invalid_argument("bad vertex group tag \"" + std::string(tag) + "\"");
}

std::string VertexGroup::tag() const {
  return is_integers() ? "Z" : "Z/" + std::to_string(modulus_);
}

VElem VertexGroup::canon(VElem x) const {
  if (is_integers()) return x;
  VElem r = x % modulus_;
  return r < 0 ? r + modulus_ : r;
}

VElem VertexGroup::multiply(VElem a, VElem b) const { return canon(a + b); }

VElem VertexGroup::invert(VElem a) const { return canon(-a); }

long long VertexGroup::norm(VElem a) const {
  if (!has_norm())
    throw std::invalid_argument("vertex group " + tag() + " has no Dudley norm");
  return std::llabs(a);
}

std::vector<RootPair> VertexGroup::roots_with_exponents(VElem a) const {
  if (!has_norm())
    throw std::invalid_argument("vertex group " + tag() + " does not provide roots");
  return integer_roots(a);
}

std::vector<VElem> VertexGroup::generators_of_norm_one() const {
  if (!has_norm())
    throw std::invalid_argument("vertex group " + tag() + " has no norm-one generators");
  return {1, -1};
}

CyclicElement make_cyclic(long long modulus, long long value) {
  if (modulus < 2) throw std::invalid_argument("cyclic element needs modulus >= 2");
  long long r = value % modulus;
  if (r < 0) r += modulus;
  return {modulus, r};
}

CyclicElement cyclic_multiply(const CyclicElement& a, const CyclicElement& b) {
  if (a.modulus != b.modulus)
    throw std::invalid_argument("cyclic modulus mismatch: " + std::to_string(a.modulus) +
                                " vs " + std::to_string(b.modulus));
  return make_cyclic(a.modulus, a.residue + b.residue);
}

CyclicElement cyclic_invert(const CyclicElement& a) { return make_cyclic(a.modulus, -a.residue); }

}  // namespace slender
