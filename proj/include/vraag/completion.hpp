#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vraag/theta.hpp"

namespace vraag {

// The completion complex, flattened after building: canonical vertex ids are
// assigned breadth-first from the basepoint (id 0) in label order, so equal
// complexes serialize identically.
struct CompletionResult {
  std::size_t vertices = 0;
  // (v1, v2, label) with v1 <= v2 as canonical ids; label is a gamma vertex
  // index; sorted. Edge id = position.
  std::vector<std::tuple<int, int, int>> edges;
  // Boundary edge ids in canonical cyclic order.
  std::vector<std::array<int, 4>> squares;
  bool finite = false;
  bool saturated = false;
  std::size_t cells = 0;

  std::string canonical_form(const SimplicialGraph& gamma) const;
  std::string export_listing(const SimplicialGraph& gamma) const;
  bool full_valence(const SimplicialGraph& gamma) const;
};

// Fold / square-attach / square-identify alternation from the bouquet of
// subdivided lambda-edge loops. Gamma must be triangle-free. A shuffle seed
// randomizes the operation order inside each phase (confluence testing).
CompletionResult build_completion(const ThetaGraph& theta, std::size_t cell_cap = 50000,
                                  std::optional<std::uint64_t> shuffle_seed = std::nullopt);

struct OmegaReport {
  bool full_valence = false;
  std::size_t vertex_count = 0;
  std::optional<std::size_t> index;  // vertex count when full valence, else none
};

// Index readout; requires a saturated completion.
OmegaReport omega_index_report(const CompletionResult& completion, const SimplicialGraph& gamma);

}  // namespace vraag
