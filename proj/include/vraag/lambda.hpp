#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vraag/theta.hpp"
#include "vraag/word.hpp"

namespace vraag {

struct LambdaLetter {
  int edge = 0;  // index into ThetaGraph::lambda_edges()
  int sign = 1;

  bool operator==(const LambdaLetter&) const = default;
};

// A word in the lambda-edge generators of the subgroup G^Theta. Expands to a
// RACG word over gamma of twice the length.
class LambdaWord {
public:
  LambdaWord() = default;
  LambdaWord(std::shared_ptr<const ThetaGraph> theta, std::vector<LambdaLetter> letters);
  static LambdaWord parse(std::shared_ptr<const ThetaGraph> theta, const std::string& literal);

  const std::vector<LambdaLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const ThetaGraph& theta() const { return *theta_; }
  const std::shared_ptr<const ThetaGraph>& theta_ptr() const { return theta_; }

  GroupWord expand() const;  // RACG word over gamma
  std::string str() const;   // "a-c b-d^-1"

private:
  std::shared_ptr<const ThetaGraph> theta_;
  std::vector<LambdaLetter> letters_;
};

// Commuting graph Delta of the lambda-edge generating set. Vertex i of the
// graph corresponds to lambda edge i; names are "a-b" with a < b.
struct CommutingGraph {
  SimplicialGraph graph;
  std::vector<std::pair<int, int>> endpoint_of;  // per Delta vertex, gamma endpoints (oriented)
};

// Distinct lambda edges, as products of two non-commuting involutions,
// commute iff their four endpoints span a gamma square with the lambda edges
// as diagonals; the edge test uses that square criterion directly.
CommutingGraph commuting_graph(const ThetaGraph& theta);

bool lambda_edges_commute(const ThetaGraph& theta, int e1, int e2);

// Expand pairs (a_i, a_i') of same-component vertices along the unique simple
// lambda paths into a product of lambda-edge generators.
LambdaWord lambda_edge_word(std::shared_ptr<const ThetaGraph> theta,
                            const std::vector<std::pair<int, int>>& pairs);

// The RACG word for one oriented lambda edge.
GroupWord lambda_edge_element(const ThetaGraph& theta, int edge, int sign = 1);

}  // namespace vraag
