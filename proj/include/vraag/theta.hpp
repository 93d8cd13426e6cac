#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vraag/graph.hpp"

namespace vraag {

// A gamma-cycle alternating between two fixed lambda-components. Vertices at
// even positions lie in comp_c, odd positions in comp_d; the stored sequence
// is the name-lexicographically least rotation/reflection.
struct TwoComponentCycle {
  int comp_c = -1;
  int comp_d = -1;
  std::vector<int> vertices;

  std::size_t half_length() const { return vertices.size() / 2; }
};

// Overlay of a simplicial graph gamma and a subgraph lambda of its
// complement, with lambda's connected components precomputed.
class ThetaGraph {
public:
  ThetaGraph() = default;
  ThetaGraph(SimplicialGraph gamma,
             const std::vector<std::pair<std::string, std::string>>& lambda_edges);

  const SimplicialGraph& gamma() const { return *gamma_; }
  std::shared_ptr<const SimplicialGraph> gamma_ptr() const { return gamma_; }
  const SimplicialGraph& lambda() const { return lambda_; }
  SimplicialGraph overlay() const;  // edge set E(gamma) union E(lambda)

  int component_count() const { return static_cast<int>(components_.size()); }
  int component_of(int v) const { return component_of_[static_cast<std::size_t>(v)]; }
  const std::vector<std::vector<int>>& component_vertices() const { return components_; }

  // Oriented lambda edges, sorted; default orientation is (a,b) with
  // name(a) < name(b). Verdicts must not depend on the orientation choice.
  const std::vector<std::pair<int, int>>& lambda_edges() const { return oriented_; }
  std::string lambda_edge_name(int e) const;
  ThetaGraph with_flipped_orientations(const std::vector<bool>& flip) const;

  ThetaGraph renamed(const std::vector<std::pair<std::string, std::string>>& mapping) const;

private:
  std::shared_ptr<const SimplicialGraph> gamma_;
  SimplicialGraph lambda_;
  std::vector<std::pair<int, int>> oriented_;
  std::vector<int> component_of_;
  std::vector<std::vector<int>> components_;
};

// Smallest lambda-subgraph containing X that is closed under lambda-geodesics
// (interval-closure fixpoint; the subtree hull when lambda is a forest).
SimplicialGraph lambda_convex_hull(const ThetaGraph& theta, const std::vector<int>& X);
SimplicialGraph lambda_convex_hull_names(const ThetaGraph& theta,
                                         const std::vector<std::string>& X);

std::vector<TwoComponentCycle> enumerate_two_component_squares(const ThetaGraph& theta,
                                                               int comp_c, int comp_d);

struct CycleEnumeration {
  std::vector<TwoComponentCycle> cycles;
  bool truncated = false;
};

CycleEnumeration enumerate_two_component_cycles(const ThetaGraph& theta, int comp_c, int comp_d,
                                                std::size_t max_len, std::size_t max_count);

bool exists_two_component_path(const ThetaGraph& theta, int comp_s, int comp_t, int s, int t);

// BFS reachability in the cross-edge auxiliary graph of two components; the
// endpoints may lie in either of the two (used for same-side path queries).
bool alternating_path_exists(const ThetaGraph& theta, int comp_a, int comp_b, int s, int t);

}  // namespace vraag
