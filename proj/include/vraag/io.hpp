#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vraag/theta.hpp"
#include "vraag/word.hpp"

namespace vraag {

// Theta file format: one directive per line, '#' starts a comment.
//   vertices: a b c d
//   gamma: a-b b-c c-d d-a
//   lambda: a-c b-d
ThetaGraph parse_theta(std::istream& in);
ThetaGraph parse_theta_string(const std::string& text);
ThetaGraph parse_theta_file(const std::string& path);
std::string write_theta(const ThetaGraph& theta);

// Plain graph file: 'vertices:' and 'edges:' directives.
SimplicialGraph parse_graph(std::istream& in);
SimplicialGraph parse_graph_file(const std::string& path);

// Reflections file: one 'w: a b^-1 ; s: c' per line over a given ambient
// RAAG graph.
struct ReflectionInput {
  GroupWord conjugator;
  Letter axis;
};
std::vector<ReflectionInput> parse_reflections(std::istream& in,
                                               std::shared_ptr<const SimplicialGraph> ambient);
std::vector<ReflectionInput> parse_reflections_file(const std::string& path,
                                                    std::shared_ptr<const SimplicialGraph> ambient);

}  // namespace vraag
