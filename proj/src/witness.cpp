#include "slender/witness.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "slender/roots.hpp"

namespace slender {

std::string_view method_name(WitnessMethod m) {
  switch (m) {
    case WitnessMethod::Dudley: return "dudley";
    case WitnessMethod::FiniteRoots: return "finite-roots";
    case WitnessMethod::Extension: return "extension";
    case WitnessMethod::BoundedExponent: return "bounded-exponent";
    case WitnessMethod::GraphProduct: return "graph-product";
  }
  return "?";
}

WitnessFamily dudley_family(NormFn norm) {
  WitnessFamily fam;
  fam.j = 1;
  fam.method = WitnessMethod::Dudley;
  fam.at = [norm](const GPElement& g) {
    if (g.is_identity())
      throw std::invalid_argument("witness: the identity element needs no certificate");
    const long long lg = norm(g);
    Witness w;
    w.j = 1;
    w.method = WitnessMethod::Dudley;
    w.p = [lg](long long m) { return (m + 2) * (lg + 1); };
    w.depth_bound = [norm](const GPElement& b0) { return norm(b0) + 1; };
    w.norm = norm;
    return w;
  };
  return fam;
}

Witness dudley_witness(const GPElement& g) {
  return dudley_family([](const GPElement& x) { return dudley_norm(x); }).at(g);
}

long long Enumeration::index_of(const GPElement& x) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == x) return static_cast<long long>(i);
  throw std::invalid_argument("enumeration does not contain \"" + x.str() + "\"");
}

std::shared_ptr<const Enumeration> ball_enumeration(const ContextPtr& ctx, long long radius) {
  auto out = std::make_shared<Enumeration>();
  out->elements = ball(ctx, radius);
  return out;
}

Witness finite_roots_witness(const GPElement& g,
                             std::shared_ptr<const Enumeration> enumeration) {
  if (g.is_identity())
    throw std::invalid_argument("witness: the identity element needs no certificate");
  if (!enumeration || enumeration->elements.empty())
    throw std::invalid_argument("finite_roots_witness: empty enumeration");

  struct Cache {
    std::mutex mutex;
    std::map<long long, long long> p;
  };
  auto cache = std::make_shared<Cache>();

  Witness w;
  w.j = 1;
  w.method = WitnessMethod::FiniteRoots;
  w.p = [g, enumeration, cache](long long m) {
    if (m < 0) throw std::invalid_argument("p-sequence index must be >= 0");
    {
      std::lock_guard<std::mutex> lk(cache->mutex);
      auto it = cache->p.find(m);
      if (it != cache->p.end()) return it->second;
    }
    if (m + 1 > static_cast<long long>(enumeration->elements.size()))
      throw std::invalid_argument("finite_roots_witness: enumeration shorter than m + 1");
    std::vector<GPElement> xm(enumeration->elements.begin(),
                              enumeration->elements.begin() + (m + 1));
    const auto closure = roots_closure(g, std::move(xm), m);
    const long long value = power_free_bound(closure);
    std::lock_guard<std::mutex> lk(cache->mutex);
    cache->p.emplace(m, value);
    return value;
  };
  w.depth_bound = [enumeration](const GPElement& b0) { return enumeration->index_of(b0) + 1; };
  return w;
}

// ---------------------------------------------------------------------------
// Extensions

ShortExactSequence product_projection(const ContextPtr& total, int q_vertex) {
  if (!total) throw std::invalid_argument("null group context");
  const int n = static_cast<int>(total->size());
  if (q_vertex < 0 || q_vertex >= n) throw std::invalid_argument("bad product factor index");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!total->graph().adjacent(i, j))
        throw std::invalid_argument("product projection requires a complete graph");

  std::vector<std::string> kernel_names;
  std::vector<VertexGroup> kernel_groups;
  std::vector<std::pair<std::string, std::string>> kernel_edges;
  for (int i = 0; i < n; ++i) {
    if (i == q_vertex) continue;
    kernel_names.push_back(total->graph().vertex_name(static_cast<std::size_t>(i)));
    kernel_groups.push_back(total->group(i));
  }
  for (std::size_t i = 0; i < kernel_names.size(); ++i)
    for (std::size_t j = i + 1; j < kernel_names.size(); ++j)
      kernel_edges.emplace_back(kernel_names[i], kernel_names[j]);

  ShortExactSequence ses;
  ses.total = total;
  ses.quotient = GroupContext::make(
      {total->graph().vertex_name(static_cast<std::size_t>(q_vertex))}, {},
      {total->group(q_vertex)});
  ses.kernel = GroupContext::make(kernel_names, kernel_edges, kernel_groups);
  ses.project = [total, q_vertex, q = ses.quotient](const GPElement& x) {
    Word w;
    for (const Syllable& s : x.syllables())
      if (s.vertex == q_vertex) w.push_back({0, s.element});
    return normalize(q, std::move(w));
  };
  ses.restrict_to_kernel = [q_vertex, k = ses.kernel](const GPElement& x) {
    Word w;
    for (const Syllable& s : x.syllables()) {
      if (s.vertex == q_vertex)
        throw std::invalid_argument("element is not in the product kernel");
      w.push_back({s.vertex < q_vertex ? s.vertex : s.vertex - 1, s.element});
    }
    return normalize(k, std::move(w));
  };
  return ses;
}

ShortExactSequence sigma_sequence(const ContextPtr& ctx) {
  if (!ctx) throw std::invalid_argument("null group context");
  std::vector<std::pair<std::string, std::string>> all_edges;
  for (std::size_t i = 0; i < ctx->size(); ++i)
    for (std::size_t j = i + 1; j < ctx->size(); ++j)
      all_edges.emplace_back(ctx->graph().vertex_name(i), ctx->graph().vertex_name(j));
  std::vector<VertexGroup> groups;
  for (std::size_t i = 0; i < ctx->size(); ++i) groups.push_back(ctx->group(static_cast<int>(i)));

  ShortExactSequence ses;
  ses.total = ctx;
  ses.quotient = GroupContext::make(ctx->graph().vertices(), all_edges, groups);
  ses.kernel = ctx;
  ses.project = [q = ses.quotient](const GPElement& x) {
    const auto comps = sigma(x);
    Word w;
    for (std::size_t v = 0; v < comps.size(); ++v)
      if (comps[v] != 0) w.push_back({static_cast<int>(v), comps[v]});
    return normalize(q, std::move(w));
  };
  ses.restrict_to_kernel = [](const GPElement& x) { return x; };
  return ses;
}

WitnessFamily extension_witness(WitnessFamily n_family, WitnessFamily q_family,
                                ShortExactSequence ses) {
  WitnessFamily fam;
  fam.j = n_family.j * q_family.j;
  fam.method = WitnessMethod::Extension;
  const long long j_total = fam.j;
  fam.at = [n_family, q_family, ses, j_total](const GPElement& g) {
    if (g.is_identity())
      throw std::invalid_argument("witness: the identity element needs no certificate");
    Witness out;
    out.j = j_total;
    out.method = WitnessMethod::Extension;
    const GPElement gj = power(g, j_total);
    if (!ses.project(g).is_identity()) {
      const Witness wq = q_family.at(ses.project(gj));
      out.p = wq.p;
      if (wq.depth_bound) {
        out.depth_bound = [project = ses.project, inner = *wq.depth_bound](
                              const GPElement& b0) { return inner(project(b0)); };
      }
    } else {
      const Witness wn = n_family.at(ses.restrict_to_kernel(gj));
      out.p = [inner = wn.p](long long m) { return (m + 1) * inner(m); };
      // The kernel branch proves nonexistence without exhibiting a depth.
    }
    return out;
  };
  return fam;
}

Witness bounded_exponent_extension_witness(Witness n_witness, long long d) {
  if (d < 1) throw std::invalid_argument("bounded exponent d must be >= 1");
  Witness out = std::move(n_witness);
  out.j *= d;
  out.method = WitnessMethod::BoundedExponent;
  out.p = [inner = out.p, d](long long m) { return d * inner(m); };
  out.norm = {};  // no longer a plain Dudley witness
  return out;
}

WitnessFamily direct_sum_witness(const ContextPtr& complete_ctx) {
  if (!complete_ctx || complete_ctx->size() == 0)
    throw std::invalid_argument("direct sum witness needs a nonempty graph");
  const int n = static_cast<int>(complete_ctx->size());
  for (int i = 0; i < n; ++i)
    if (!complete_ctx->group(i).has_norm())
      throw std::invalid_argument("direct sum witness: vertex group " +
                                  complete_ctx->group(i).tag() + " has no Dudley norm");
  const NormFn dn = [](const GPElement& x) { return dudley_norm(x); };

  // Fold over vertices in declaration order, adding one factor at a time.
  std::vector<std::string> names{complete_ctx->graph().vertex_name(0)};
  std::vector<VertexGroup> groups{complete_ctx->group(0)};
  std::vector<std::pair<std::string, std::string>> edges;
  WitnessFamily fam = dudley_family(dn);

  for (int i = 1; i < n; ++i) {
    for (const std::string& existing : names)
      edges.emplace_back(existing, complete_ctx->graph().vertex_name(static_cast<std::size_t>(i)));
    names.push_back(complete_ctx->graph().vertex_name(static_cast<std::size_t>(i)));
    groups.push_back(complete_ctx->group(i));
    ContextPtr next_ctx = GroupContext::make(names, edges, groups);
    fam = extension_witness(fam, dudley_family(dn), product_projection(next_ctx, i));
  }
  return fam;
}

WitnessFamily graph_product_witness(const ContextPtr& ctx) {
  if (!ctx || ctx->size() == 0)
    throw std::invalid_argument("graph product witness needs a nonempty graph");
  if (!ctx->all_vertex_groups_normed())
    throw std::invalid_argument("graph product witness requires Dudley-normed vertex groups");

  const ShortExactSequence ses = sigma_sequence(ctx);
  const WitnessFamily famN =
      dudley_family([](const GPElement& x) { return kernel_sigma_norm(x); });
  const WitnessFamily famQ = direct_sum_witness(ses.quotient);
  WitnessFamily fam = extension_witness(famN, famQ, ses);
  fam.method = WitnessMethod::GraphProduct;
  fam.at = [inner = fam.at](const GPElement& g) {
    Witness w = inner(g);
    w.method = WitnessMethod::GraphProduct;
    return w;
  };
  return fam;
}

// ---------------------------------------------------------------------------
// Certificates

RefutationCertificate refutation_certificate(const Witness& w, const GPElement& g,
                                             const GPElement& b0, std::vector<long long> k) {
  if (w.method != WitnessMethod::Dudley || !w.norm || !w.depth_bound)
    throw std::invalid_argument("refutation certificates require a Dudley witness");
  if (g.is_identity()) throw std::invalid_argument("certificate: g must be nontrivial");

  RefutationCertificate cert;
  cert.g = g.str();
  cert.b0 = b0.str();
  cert.j = w.j;
  cert.Lg = w.norm(g);
  cert.Lb0 = w.norm(b0);
  cert.M = (*w.depth_bound)(b0);
  if (static_cast<long long>(k.size()) < cert.M + 1)
    throw std::invalid_argument("certificate: k sequence shorter than M + 1 = " +
                                std::to_string(cert.M + 1));
  k.resize(static_cast<std::size_t>(cert.M + 1));
  for (long long m = 0; m <= cert.M; ++m) {
    const long long pm = w.p(m);
    const long long km = k[static_cast<std::size_t>(m)];
    if (km < 1 || km % pm != 0)
      throw std::invalid_argument("certificate: p_" + std::to_string(m) + " = " +
                                  std::to_string(pm) + " does not divide k_" +
                                  std::to_string(m) + " = " + std::to_string(km));
  }
  cert.k = std::move(k);
  cert.LB = (cert.M + 1) * (cert.Lg + 1) - cert.M * cert.Lg;
  cert.valid = cert.LB > cert.Lb0;
  return cert;
}

bool certificate_checks(const RefutationCertificate& cert, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (cert.Lg < 1) return fail("L(g) must be >= 1 for nontrivial g");
  if (cert.M != cert.Lb0 + 1) return fail("M != L(b0) + 1");
  if (static_cast<long long>(cert.k.size()) != cert.M + 1) return fail("wrong k length");
  for (long long m = 0; m <= cert.M; ++m) {
    const long long pm = (m + 2) * (cert.Lg + 1);
    const long long km = cert.k[static_cast<std::size_t>(m)];
    if (km % pm != 0) return fail("divisibility fails at m = " + std::to_string(m));
    if (km < pm) return fail("k_m below p_m at m = " + std::to_string(m));
  }
  const long long floor_bound = (cert.M + 1) * (cert.Lg + 1);
  // Terminal step, b_{M+1} trivial: L(b_M^{k_{M-1}}) = k_{M-1}.
  if (cert.k[static_cast<std::size_t>(cert.M - 1)] < floor_bound)
    return fail("terminal branch k_{M-1} inequality fails");
  // Terminal step, b_{M+1} nontrivial: L(b_M^{k_{M-1}}) >= k_M - L(g).
  if (cert.k[static_cast<std::size_t>(cert.M)] - cert.Lg < floor_bound)
    return fail("terminal branch k_M inequality fails");
  // Telescoping: L(b_0) >= L(b_M^{k_{M-1}}) - M*L(g) >= LB.
  if (cert.LB != floor_bound - cert.M * cert.Lg) return fail("telescoped bound mismatch");
  if (!(cert.LB > cert.Lb0)) return fail("lower bound does not exceed L(b0)");
  if (!cert.valid) return fail("certificate not marked valid");
  return true;
}

nlohmann::json certificate_json(const RefutationCertificate& cert) {
  nlohmann::json doc;
  doc["g"] = cert.g;
  doc["b0"] = cert.b0;
  doc["j"] = cert.j;
  doc["k"] = cert.k;
  doc["M"] = cert.M;
  doc["Lg"] = cert.Lg;
  doc["Lb0"] = cert.Lb0;
  doc["LB"] = cert.LB;
  doc["valid"] = cert.valid;
  return doc;
}

}  // namespace slender
