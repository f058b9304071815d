#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slender {

/// Finite simple graph with a fixed vertex order. Adjacency marks which
/// vertex groups commute elementwise in a graph product; the declaration
/// order of vertices is the total order used by canonical forms.
class CommutationGraph {
public:
  CommutationGraph(std::vector<std::string> vertices,
                   std::vector<std::pair<std::string, std::string>> edges);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& vertex_name(std::size_t i) const { return names_[i]; }

  /// Index of a declared vertex; throws std::invalid_argument on unknown names.
  int vertex_index(std::string_view name) const;
  /// Index of a vertex, or -1 when not declared.
  int find_vertex(std::string_view name) const;

  /// Whether two *distinct* declared vertices are joined by an edge.
  /// Throws on unknown names and on v0 == v1.
  bool commutes(std::string_view v0, std::string_view v1) const;
  bool commutes(int v0, int v1) const;

  /// Unchecked adjacency by index; the diagonal is false.
  bool adjacent(int v0, int v1) const { return adj_[v0][v1]; }

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const CommutationGraph& other) const = default;

private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> adj_;
};

}  // namespace slender
