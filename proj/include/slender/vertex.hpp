#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace slender {

/// Vertex-group elements are stored as plain integers; the owning
/// VertexGroup fixes the interpretation (an integer for Z, a residue for
/// Z/n). Both instances are written additively.
using VElem = long long;

struct RootPair {
  VElem base;
  long long exponent;  // >= 1, base^exponent = target
  auto operator<=>(const RootPair&) const = default;
};

/// All (h, n) with n >= 1 and n*h = k. For k = 0 this is {(0, 1)}: the
/// group is torsion-free, so exponents on the identity carry no content.
std::vector<RootPair> integer_roots(long long k);

/// The two concrete vertex groups: the integers Z (carrying the norm
/// |k|, exact roots and the generators +-1) and the cyclic groups Z/n,
/// which deliberately offer none of those — torsion is incompatible with
/// a Dudley norm, and callers that need one must reject them.
class VertexGroup {
public:
  static VertexGroup integers() { return VertexGroup(0); }
  static VertexGroup cyclic(long long modulus);
  /// Parses a tag from the group file: "Z", "Z/2", "Z/3", ...
  static VertexGroup from_tag(std::string_view tag);

  bool is_integers() const { return modulus_ == 0; }
  long long modulus() const { return modulus_; }  // 0 for Z
  std::string tag() const;

  VElem identity() const { return 0; }
  /// Canonical representative: k itself for Z, the residue in [0, n) for Z/n.
  VElem canon(VElem x) const;
  VElem multiply(VElem a, VElem b) const;
  VElem invert(VElem a) const;
  bool is_identity(VElem a) const { return canon(a) == 0; }

  bool has_norm() const { return is_integers(); }
  long long norm(VElem a) const;
  std::vector<RootPair> roots_with_exponents(VElem a) const;
  std::vector<VElem> generators_of_norm_one() const;

  bool operator==(const VertexGroup&) const = default;

private:
  explicit VertexGroup(long long modulus) : modulus_(modulus) {}
  long long modulus_ = 0;  // 0 encodes Z
};

/// Standalone modular element, used for vertex-level arithmetic tests and
/// the free-product quotient of the counterexample group.
struct CyclicElement {
  long long modulus;  // >= 2
  long long residue;  // in [0, modulus)
  bool operator==(const CyclicElement&) const = default;
};

CyclicElement make_cyclic(long long modulus, long long value);
/// Residue addition; throws on modulus mismatch.
CyclicElement cyclic_multiply(const CyclicElement& a, const CyclicElement& b);
CyclicElement cyclic_invert(const CyclicElement& a);

}  // namespace slender
