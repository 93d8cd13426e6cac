#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vraag/families.hpp"
#include "vraag/theta.hpp"
#include "vraag/word.hpp"

namespace vraag::testing {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

inline SimplicialGraph graph(std::vector<std::string> verts, EdgeList edges = {}) {
  return SimplicialGraph(std::move(verts), edges);
}

inline std::shared_ptr<const SimplicialGraph> share(SimplicialGraph g) {
  return std::make_shared<const SimplicialGraph>(std::move(g));
}

inline std::shared_ptr<const ThetaGraph> share(ThetaGraph t) {
  return std::make_shared<const ThetaGraph>(std::move(t));
}

inline std::shared_ptr<const ThetaGraph> theta(std::vector<std::string> verts, EdgeList gamma,
                                               EdgeList lambda) {
  return share(ThetaGraph(SimplicialGraph(std::move(verts), gamma), lambda));
}

inline std::shared_ptr<const ThetaGraph> family(Family f, int n = 0, int k = 0) {
  return share(make_family(FamilySpec{f, n, k}));
}

inline SimplicialGraph c4() {
  return graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

inline SimplicialGraph c6() {
  return graph({"1", "2", "3", "4", "5", "6"},
               {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}});
}

inline GroupWord racg_word(std::shared_ptr<const SimplicialGraph> g, const std::string& lit) {
  return GroupWord::parse(std::move(g), true, lit);
}

inline GroupWord raag_word(std::shared_ptr<const SimplicialGraph> g, const std::string& lit) {
  return GroupWord::parse(std::move(g), false, lit);
}

}  // namespace vraag::testing
