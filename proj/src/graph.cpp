#include "slender/graph.hpp"

#include <stdexcept>

namespace slender {

namespace {

void validate_name(const std::string& name) {
  if (name.empty())
    throw std::invalid_argument("vertex name must be nonempty");
  if (name == "e")
    throw std::invalid_argument("vertex name \"e\" is reserved for the identity");
  for (char c : name)
    if (c == '^' || c == ' ' || c == '\t' || c == '\n')
      throw std::invalid_argument("vertex name \"" + name +
                                  "\" contains a character reserved by the element grammar");
}

}  // namespace

CommutationGraph::CommutationGraph(std::vector<std::string> vertices,
                                   std::vector<std::pair<std::string, std::string>> edges)
    : names_(std::move(vertices)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    validate_name(names_[i]);
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("duplicate vertex name \"" + names_[i] + "\"");
  }
  adj_.assign(names_.size(), std::vector<bool>(names_.size(), false));
  for (const auto& [a, b] : edges) {
    const int ia = vertex_index(a);
    const int ib = vertex_index(b);
    if (ia == ib)
      throw std::invalid_argument("loop at vertex \"" + a + "\" is not allowed");
    adj_[ia][ib] = true;
    adj_[ib][ia] = true;
  }
}

int CommutationGraph::vertex_index(std::string_view name) const {
  const int i = find_vertex(name);
  if (i < 0)
    throw std::invalid_argument("unknown vertex \"" + std::string(name) + "\"");
  return i;
}

int CommutationGraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool CommutationGraph::commutes(std::string_view v0, std::string_view v1) const {
  return commutes(vertex_index(v0), vertex_index(v1));
}

bool CommutationGraph::commutes(int v0, int v1) const {
  if (v0 < 0 || v1 < 0 || v0 >= static_cast<int>(size()) || v1 >= static_cast<int>(size()))
    throw std::invalid_argument("vertex index out of range");
  if (v0 == v1)
    throw std::invalid_argument("commutes is only defined across distinct vertices");
  return adj_[v0][v1];
}

std::vector<std::pair<int, int>> CommutationGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (adj_[i][j]) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

}  // namespace slender
