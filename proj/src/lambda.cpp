#include "vraag/lambda.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "vraag/errors.hpp"

namespace vraag {

LambdaWord::LambdaWord(std::shared_ptr<const ThetaGraph> theta, std::vector<LambdaLetter> letters)
    : theta_(std::move(theta)), letters_(std::move(letters)) {
  if (!theta_) fail(errc::internal, "lambda word without theta graph");
  for (const auto& l : letters_) {
    if (l.edge < 0 || l.edge >= static_cast<int>(theta_->lambda_edges().size())) {
      fail(errc::bad_params, "lambda letter out of range");
    }
    if (l.sign != 1 && l.sign != -1) fail(errc::bad_params, "lambda letter sign must be +1 or -1");
  }
  if (2 * letters_.size() > kMaxWordLetters) fail(errc::word_too_long, "lambda word too long");
}

LambdaWord LambdaWord::parse(std::shared_ptr<const ThetaGraph> theta, const std::string& literal) {
  // Written order matters: "a-b" denotes the element ab, which is the
  // inverse of the generator when the stored orientation is (b,a).
  std::map<std::pair<int, int>, std::pair<int, int>> lookup;  // (u,v) -> (edge, sign)
  for (std::size_t e = 0; e < theta->lambda_edges().size(); ++e) {
    const auto& [a, b] = theta->lambda_edges()[e];
    lookup[{a, b}] = {static_cast<int>(e), 1};
    lookup[{b, a}] = {static_cast<int>(e), -1};
  }
  std::vector<LambdaLetter> ls;
  std::istringstream in(literal);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      sign = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    const auto dash = tok.find('-');
    if (dash == std::string::npos) fail(errc::parse_error, "lambda letter '" + tok + "' has no dash");
    const int u = theta->gamma().index(tok.substr(0, dash));
    const int v = theta->gamma().index(tok.substr(dash + 1));
    auto it = lookup.find({u, v});
    if (it == lookup.end()) fail(errc::parse_error, "unknown lambda edge '" + tok + "'");
    ls.push_back(LambdaLetter{it->second.first, sign * it->second.second});
  }
  return LambdaWord(std::move(theta), std::move(ls));
}

GroupWord lambda_edge_element(const ThetaGraph& theta, int edge, int sign) {
  const auto& [a, b] = theta.lambda_edges()[static_cast<std::size_t>(edge)];
  std::vector<Letter> ls;
  if (sign > 0) {
    ls = {Letter{a, 1}, Letter{b, 1}};
  } else {
    ls = {Letter{b, 1}, Letter{a, 1}};
  }
  return GroupWord(theta.gamma_ptr(), true, std::move(ls));
}

GroupWord LambdaWord::expand() const {
  std::vector<Letter> ls;
  ls.reserve(2 * letters_.size());
  for (const auto& l : letters_) {
    const auto& [a, b] = theta_->lambda_edges()[static_cast<std::size_t>(l.edge)];
    if (l.sign > 0) {
      ls.push_back(Letter{a, 1});
      ls.push_back(Letter{b, 1});
    } else {
      ls.push_back(Letter{b, 1});
      ls.push_back(Letter{a, 1});
    }
  }
  return GroupWord(theta_->gamma_ptr(), true, std::move(ls));
}

std::string LambdaWord::str() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    const auto& [a, b] = theta_->lambda_edges()[static_cast<std::size_t>(l.edge)];
    out += theta_->gamma().name(a) + "-" + theta_->gamma().name(b);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

bool lambda_edges_commute(const ThetaGraph& theta, int e1, int e2) {
  if (e1 == e2) return true;
  const auto& g = theta.gamma();
  auto [a, b] = theta.lambda_edges()[static_cast<std::size_t>(e1)];
  auto [c, d] = theta.lambda_edges()[static_cast<std::size_t>(e2)];
  if (a == c || a == d || b == c || b == d) return false;
  return g.adjacent(a, c) && g.adjacent(c, b) && g.adjacent(b, d) && g.adjacent(d, a);
}

CommutingGraph commuting_graph(const ThetaGraph& theta) {
  const int m = static_cast<int>(theta.lambda_edges().size());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) names.push_back(theta.lambda_edge_name(e));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int e1 = 0; e1 < m; ++e1) {
    for (int e2 = e1 + 1; e2 < m; ++e2) {
      if (lambda_edges_commute(theta, e1, e2)) {
        edges.emplace_back(theta.lambda_edge_name(e1), theta.lambda_edge_name(e2));
      }
    }
  }
  CommutingGraph cg;
  cg.graph = SimplicialGraph(names, edges);
  cg.endpoint_of.resize(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    const int v = cg.graph.index(theta.lambda_edge_name(e));
    cg.endpoint_of[static_cast<std::size_t>(v)] = theta.lambda_edges()[static_cast<std::size_t>(e)];
  }
  return cg;
}

LambdaWord lambda_edge_word(std::shared_ptr<const ThetaGraph> theta,
                            const std::vector<std::pair<int, int>>& pairs) {
  const ThetaGraph& th = *theta;
  const SimplicialGraph& lam = th.lambda();

  std::map<std::pair<int, int>, int> edge_index;
  std::map<std::pair<int, int>, int> edge_sign;
  for (std::size_t e = 0; e < th.lambda_edges().size(); ++e) {
    const auto& [a, b] = th.lambda_edges()[e];
    edge_index[{a, b}] = static_cast<int>(e);
    edge_sign[{a, b}] = 1;
    edge_index[{b, a}] = static_cast<int>(e);
    edge_sign[{b, a}] = -1;
  }

  std::vector<LambdaLetter> out;
  for (const auto& [from, to] : pairs) {
    if (from == to) continue;
    const int cf = th.component_of(from);
    const int ct = th.component_of(to);
    if (cf == -1 || ct == -1) fail(errc::vertex_not_in_lambda, "pair endpoint not a lambda vertex");
    if (cf != ct) fail(errc::mixed_components, "pair endpoints in different lambda components");
    // Unique simple path requires the component to be a tree.
    const auto& members = th.component_vertices()[static_cast<std::size_t>(cf)];
    std::size_t comp_edges = 0;
    for (const auto& [u, v] : lam.edges()) {
      if (th.component_of(u) == cf && th.component_of(v) == cf) ++comp_edges;
    }
    if (comp_edges != members.size() - 1) {
      fail(errc::not_unique_path, "lambda component contains a cycle");
    }
    // BFS path from 'from' to 'to' in lambda.
    std::vector<int> prev(static_cast<std::size_t>(lam.vertex_count()), -2);
    std::queue<int> q;
    prev[static_cast<std::size_t>(from)] = -1;
    q.push(from);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      if (v == to) break;
      for (int u = 0; u < lam.vertex_count(); ++u) {
        if (u != v && lam.adjacent(v, u) && prev[static_cast<std::size_t>(u)] == -2) {
          prev[static_cast<std::size_t>(u)] = v;
          q.push(u);
        }
      }
    }
    std::vector<int> path;
    for (int v = to; v != -1; v = prev[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const auto key = std::make_pair(path[i], path[i + 1]);
      out.push_back(LambdaLetter{edge_index.at(key), edge_sign.at(key)});
    }
  }
  return LambdaWord(std::move(theta), std::move(out));
}

}  // namespace vraag
