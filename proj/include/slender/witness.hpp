#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "slender/gp.hpp"
#include "slender/norms.hpp"

namespace slender {

enum class WitnessMethod { Dudley, FiniteRoots, Extension, BoundedExponent, GraphProduct };
std::string_view method_name(WitnessMethod m);

/// Per-element certificate data for one nontrivial g: an exponent j and a
/// divisibility sequence p_m under which the cascade y_m = g^j y_{m+1}^{k_m}
/// is unsolvable; depth_bound, when present, maps b_0 to a depth M at
/// which the finite system with y_0 = b_0 already has no solution.
struct Witness {
  long long j = 1;
  WitnessMethod method = WitnessMethod::Dudley;
  std::function<long long(long long)> p;  // m >= 0
  std::optional<std::function<long long(const GPElement&)>> depth_bound;
  NormFn norm;  // set on Dudley-backed witnesses; feeds certificates
};

/// A witness for every nontrivial element of one group, sharing the
/// uniform exponent j.
struct WitnessFamily {
  long long j = 1;
  WitnessMethod method = WitnessMethod::Dudley;
  std::function<Witness(const GPElement&)> at;
};

/// j = 1, p_m = (m+2)(L(g)+1), depth_bound(b_0) = L(b_0) + 1.
WitnessFamily dudley_family(NormFn norm);
/// dudley_family with the graph-product Dudley norm, applied at g.
Witness dudley_witness(const GPElement& g);

/// Canonically ordered (norm, serialization) element listing with index
/// lookup, as produced by ball enumeration.
struct Enumeration {
  std::vector<GPElement> elements;
  long long index_of(const GPElement& x) const;  // throws when absent
};
std::shared_ptr<const Enumeration> ball_enumeration(const ContextPtr& ctx, long long radius);

/// j = 1, p_m = power_free_bound(roots_closure(g, X_m, m)) with X_m the
/// first m+1 enumerated elements, depth_bound(b_0) = index(b_0) + 1.
Witness finite_roots_witness(const GPElement& g, std::shared_ptr<const Enumeration> enumeration);

/// Computable data of 1 -> N -> G -> Q -> 1: the projection q, the
/// quotient context, and the reinterpretation of kernel members as
/// elements of N.
struct ShortExactSequence {
  ContextPtr total;
  ContextPtr quotient;
  ContextPtr kernel;
  std::function<GPElement(const GPElement&)> project;
  std::function<GPElement(const GPElement&)> restrict_to_kernel;
};

/// G = N x Q with Q the named vertex of a complete-graph context.
ShortExactSequence product_projection(const ContextPtr& total, int q_vertex);
/// 1 -> ker(sigma) -> G -> direct sum of vertex groups -> 1.
ShortExactSequence sigma_sequence(const ContextPtr& ctx);

/// j = j_Q * j_N. Elements with q(g) != 1 inherit the p-sequence of
/// q(g^j) in Q (with the transported depth bound); kernel members get
/// p_m = (m+1) p'_m from the N-witness of g^j, with no depth bound.
WitnessFamily extension_witness(WitnessFamily n_family, WitnessFamily q_family,
                                ShortExactSequence ses);

/// j = j_N * d, p_m = d * p'_m, for quotients of exponent dividing d.
Witness bounded_exponent_extension_witness(Witness n_witness, long long d);

/// Witness factory for a graph product with Dudley-normed vertex groups:
/// the sigma extension with the syllable-count norm on ker(sigma) and the
/// folded direct-sum witness on the quotient.
WitnessFamily graph_product_witness(const ContextPtr& ctx);
/// The fold itself (exposed for the combinator checks).
WitnessFamily direct_sum_witness(const ContextPtr& complete_ctx);

/// Arithmetic refutation transcript of one cascade instance, checkable by
/// integer arithmetic plus the two recorded norm values.
struct RefutationCertificate {
  std::string g;
  std::string b0;
  long long j = 1;
  std::vector<long long> k;  // k_0 .. k_M
  long long M = 0;
  long long Lg = 0;
  long long Lb0 = 0;
  long long LB = 0;  // (M+1)(Lg+1) - M*Lg, the telescoped lower bound on L(b_0)
  bool valid = false;
};

/// Builds the certificate for a Dudley witness of g; requires p_m | k_m
/// for m <= M = L(b_0) + 1 and at least M + 1 supplied exponents.
RefutationCertificate refutation_certificate(const Witness& w, const GPElement& g,
                                             const GPElement& b0, std::vector<long long> k);

/// Independent re-check: divisibility, both terminal-branch inequalities,
/// the telescoping bound, and the verdict LB > L(b_0).
bool certificate_checks(const RefutationCertificate& cert, std::string* why = nullptr);

nlohmann::json certificate_json(const RefutationCertificate& cert);

}  // namespace slender
