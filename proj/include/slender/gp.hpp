#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "slender/graph.hpp"
#include "slender/vertex.hpp"

namespace slender {

/// One maximal vertex-group factor of a word. The element is nontrivial.
struct Syllable {
  int vertex;     // index into the context's vertex order
  VElem element;  // nontrivial element of the vertex group at that vertex
  auto operator<=>(const Syllable&) const = default;
};

using Word = std::vector<Syllable>;

class GroupContext;
using ContextPtr = std::shared_ptr<const GroupContext>;
class GPElement;

/// A commutation graph together with its vertex groups. Contexts are
/// immutable and shared by the elements built over them.
class GroupContext : public std::enable_shared_from_this<GroupContext> {
public:
  static ContextPtr make(std::vector<std::string> vertices,
                         std::vector<std::pair<std::string, std::string>> edges,
                         std::vector<VertexGroup> groups = {});
  /// Group file schema: {"vertices": [...], "edges": [[a, b], ...],
  /// "vertex_groups": {name: "Z" | "Z/n"}}. Unknown keys are rejected;
  /// vertex_groups defaults every vertex to Z.
  static ContextPtr from_json(const nlohmann::json& doc);
  static ContextPtr load_file(const std::string& path);

  const CommutationGraph& graph() const { return graph_; }
  const VertexGroup& group(int v) const { return groups_[static_cast<std::size_t>(v)]; }
  std::size_t size() const { return graph_.size(); }
  bool all_vertex_groups_normed() const;
  bool same_structure(const GroupContext& other) const;

  nlohmann::json to_json() const;

  /// Memoized ball enumeration, keyed by radius. Thread-safe.
  std::shared_ptr<const std::vector<GPElement>> ball_cache(long long radius) const;

private:
  GroupContext(CommutationGraph graph, std::vector<VertexGroup> groups)
      : graph_(std::move(graph)), groups_(std::move(groups)) {}

  CommutationGraph graph_;
  std::vector<VertexGroup> groups_;
  mutable std::mutex ball_mutex_;
  mutable std::map<long long, std::shared_ptr<const std::vector<GPElement>>> balls_;
};

/// An element of the graph product in canonical reduced form: the unique
/// shuffle representative obtained by greedily emitting, at each step,
/// the front-movable syllable of least vertex index. Immutable.
class GPElement {
public:
  GPElement() = default;  // detached placeholder; not usable in arithmetic
  explicit GPElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  const ContextPtr& context() const { return ctx_; }
  const Word& syllables() const { return syls_; }
  bool is_identity() const { return syls_.empty(); }
  std::string str() const;

  bool operator==(const GPElement& other) const;
  bool operator!=(const GPElement& other) const { return !(*this == other); }
  /// Context-blind total order on syllable sequences (for containers).
  bool operator<(const GPElement& other) const { return syls_ < other.syls_; }

private:
  GPElement(ContextPtr ctx, Word syls) : ctx_(std::move(ctx)), syls_(std::move(syls)) {}
  ContextPtr ctx_;
  Word syls_;  // canonical

  friend GPElement normalize(const ContextPtr&, Word);
};

GPElement identity(const ContextPtr& ctx);

/// Canonical reduced form of a raw syllable sequence. Trivial syllables
/// in the input are deleted; unknown vertex indices throw.
GPElement normalize(const ContextPtr& ctx, Word raw);

/// Grammar: ELEMENT := "e" | SYLLABLE (" " SYLLABLE)*,
/// SYLLABLE := NAME ("^" INTEGER)?. Throws naming the offending token.
GPElement parse_element(const ContextPtr& ctx, std::string_view text);
std::string to_string(const GPElement& a);

GPElement multiply(const GPElement& a, const GPElement& b);
GPElement invert(const GPElement& a);
GPElement power(const GPElement& a, long long n);
inline GPElement operator*(const GPElement& a, const GPElement& b) { return multiply(a, b); }
inline GPElement pow(const GPElement& a, long long n) { return power(a, n); }

/// Conjugation-free core of an element: a = prefix * core * prefix^-1
/// with the core cyclically reduced.
struct PivotForm {
  GPElement prefix;
  GPElement core;
};

enum class PivotMode {
  AllowSplit,  // may split a syllable (u^2 w u^-1 -> prefix u, core u w)
  Strict,      // conjugates exact inverse syllable pairs only
};

/// Split-allowing pivot keeps the prefix of least Dudley weight among the
/// available conjugating syllables each round; Strict mode stops early
/// when only a partial split would make progress, so its core can fail
/// is_cyclically_reduced.
PivotForm pivot(const GPElement& a, PivotMode mode = PivotMode::AllowSplit);

bool is_cyclically_reduced(const GPElement& a);

/// Per-vertex exponent image under the abelianization-within-vertices map
/// sigma : G -> direct sum of the vertex groups.
std::vector<VElem> sigma(const GPElement& a);
bool in_sigma_kernel(const GPElement& a);

/// All elements of Dudley norm <= radius, canonical, sorted by
/// (norm, serialization). Requires every vertex group to provide
/// norm-one generators.
std::vector<GPElement> ball(const ContextPtr& ctx, long long radius);

/// True when the canonical word has no mergeable same-vertex pair
/// (diagnostic; canonical elements always satisfy it).
bool is_reduced_word(const GroupContext& ctx, const Word& w);

}  // namespace slender
