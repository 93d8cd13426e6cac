#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vraag {

// Finite simplicial graph over string-named vertices. Vertices are kept
// sorted by name, so vertex indices are name ranks; all deterministic
// iteration below relies on that order.
class SimplicialGraph {
public:
  SimplicialGraph() = default;
  SimplicialGraph(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  std::optional<int> find(const std::string& vertex) const;
  int index(const std::string& vertex) const;  // throws UnknownVertex

  bool adjacent(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * names_.size() + static_cast<std::size_t>(v)] != 0;
  }
  // Edges as index pairs (u < v), sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  SimplicialGraph complement() const;
  SimplicialGraph induced(const std::vector<int>& keep) const;
  bool same_vertices(const SimplicialGraph& other) const { return names_ == other.names_; }
  bool operator==(const SimplicialGraph& other) const {
    return names_ == other.names_ && edges_ == other.edges_;
  }

  bool triangle_free() const;
  std::vector<int> cone_vertices() const;
  bool chordal() const;
  bool connected() const;
  bool is_forest() const;

private:
  std::vector<std::string> names_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::pair<int, int>> edges_;
};

struct GraphPredicates {
  bool triangle_free = false;
  std::vector<std::string> cone_vertices;
  bool chordal = false;
};

GraphPredicates graph_predicates(const SimplicialGraph& g);

// Names must be nonempty and contain no whitespace, '-' or '|'.
void check_vertex_name(const std::string& name);

}  // namespace vraag
