#include "vraag/families.hpp"

#include <string>

#include "vraag/conditions.hpp"
#include "vraag/errors.hpp"

namespace vraag {

const char* family_name(Family f) {
  switch (f) {
    case Family::gamma_n: return "gamma_n";
    case Family::delta_nk: return "delta_nk";
    case Family::hexagon: return "hexagon";
    case Family::r5_counterexample: return "r5_counterexample";
    case Family::c4_diagonals: return "c4_diagonals";
    case Family::lambda_path_on_edgeless: return "lambda_path_on_edgeless";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::gamma_n, Family::delta_nk, Family::hexagon, Family::r5_counterexample,
                   Family::c4_diagonals, Family::lambda_path_on_edgeless}) {
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

ThetaGraph make_gamma_n(int n) {
  if (n < 3) fail(errc::bad_params, "gamma_n needs n >= 3");
  std::vector<std::string> verts{"x", "y"};
  for (int i = 1; i <= n; ++i) {
    verts.push_back("c" + std::to_string(i));
    verts.push_back("d" + std::to_string(i));
  }
  Edges gamma, lambda;
  for (int i = 1; i <= n; ++i) {
    const std::string c = "c" + std::to_string(i);
    const std::string d = "d" + std::to_string(i);
    const std::string cnext = "c" + std::to_string(i % n + 1);
    gamma.emplace_back(c, d);       // 2n-gon
    gamma.emplace_back(d, cnext);
    gamma.emplace_back("y", c);     // spokes
    gamma.emplace_back("x", d);
    lambda.emplace_back("x", c);
    lambda.emplace_back("y", d);
  }
  gamma.emplace_back("x", "y");
  return ThetaGraph(SimplicialGraph(verts, gamma), lambda);
}

ThetaGraph make_delta_nk(int n, int k) {
  if (n < 3 || k < 1) fail(errc::bad_params, "delta_nk needs n >= 3 and k >= 1");
  std::vector<std::string> verts;
  for (int i = 1; i <= n; ++i) {
    verts.push_back("a" + std::to_string(i));
    verts.push_back("b" + std::to_string(i));
  }
  for (int j = 1; j <= k; ++j) verts.push_back("a0_" + std::to_string(j));
  Edges gamma, lambda;
  for (int i = 1; i <= n; ++i) {
    const std::string b = "b" + std::to_string(i);
    gamma.emplace_back("a1", b);
    for (int j = 1; j <= k; ++j) gamma.emplace_back("a0_" + std::to_string(j), b);
  }
  for (int i = 2; i <= n; ++i) {
    const std::string a = "a" + std::to_string(i);
    gamma.emplace_back(a, "b" + std::to_string(i - 1));
    gamma.emplace_back(a, "b" + std::to_string(i));
    lambda.emplace_back("a1", a);
  }
  for (int j = 1; j <= k; ++j) lambda.emplace_back("a1", "a0_" + std::to_string(j));
  for (int i = 1; i < n; ++i) {
    lambda.emplace_back("b" + std::to_string(i), "b" + std::to_string(i + 1));
  }
  return ThetaGraph(SimplicialGraph(verts, gamma), lambda);
}

ThetaGraph make_hexagon() {
  std::vector<std::string> verts{"1", "2", "3", "4", "5", "6"};
  Edges gamma{{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}};
  Edges lambda{{"1", "3"}, {"3", "5"}, {"2", "4"}, {"4", "6"}};
  ThetaGraph theta(SimplicialGraph(verts, gamma), lambda);
  // The lambda graph is reconstructed from a picture; its expected verdict
  // profile (R1-R3 pass, R4 fails) is asserted here so a wrong
  // reconstruction cannot slip through silently.
  if (!check_R1(theta).passed || !check_R2(theta).passed || !check_R3(theta).passed ||
      check_R4(theta).passed) {
    fail(errc::internal, "hexagon fixture does not match its documented verdict profile");
  }
  return theta;
}

ThetaGraph make_r5_counterexample() {
  std::vector<std::string> verts{"a", "a'", "c", "c'", "d", "d'"};
  Edges gamma{{"c", "d"},  {"d", "c'"},  {"c'", "d'"}, {"d'", "c"},
              {"c", "a"},  {"c'", "a"},  {"d", "a'"},  {"d'", "a'"}};
  Edges lambda{{"a", "a'"}, {"c", "c'"}, {"d", "d'"}};
  return ThetaGraph(SimplicialGraph(verts, gamma), lambda);
}

ThetaGraph make_c4_diagonals() {
  std::vector<std::string> verts{"a", "b", "c", "d"};
  Edges gamma{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}};
  Edges lambda{{"a", "c"}, {"b", "d"}};
  return ThetaGraph(SimplicialGraph(verts, gamma), lambda);
}

ThetaGraph make_lambda_path_on_edgeless() {
  std::vector<std::string> verts{"1", "2", "3", "4"};
  Edges lambda{{"1", "2"}, {"2", "3"}, {"3", "4"}};
  return ThetaGraph(SimplicialGraph(verts, {}), lambda);
}

}  // namespace

ThetaGraph make_family(const FamilySpec& spec) {
  switch (spec.name) {
    case Family::gamma_n: return make_gamma_n(spec.n);
    case Family::delta_nk: return make_delta_nk(spec.n, spec.k);
    case Family::hexagon: return make_hexagon();
    case Family::r5_counterexample: return make_r5_counterexample();
    case Family::c4_diagonals: return make_c4_diagonals();
    case Family::lambda_path_on_edgeless: return make_lambda_path_on_edgeless();
  }
  fail(errc::bad_params, "unknown family");
}

}  // namespace vraag
