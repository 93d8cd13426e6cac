#include "vraag/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>

#include "vraag/errors.hpp"

namespace vraag {

void check_vertex_name(const std::string& name) {
  if (name.empty()) fail(errc::bad_vertex_name, "empty vertex name");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '-' || c == '|') {
      fail(errc::bad_vertex_name, "illegal character in vertex name '" + name + "'");
    }
  }
}

namespace {

// Derived graphs (e.g. commuting graphs) name vertices "a-b"; the stricter
// no-dash rule applies only where edge literals are parsed (theta layer).
void check_name_relaxed(const std::string& name) {
  if (name.empty()) fail(errc::bad_vertex_name, "empty vertex name");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '|') {
      fail(errc::bad_vertex_name, "illegal character in vertex name '" + name + "'");
    }
  }
}

}  // namespace

SimplicialGraph::SimplicialGraph(std::vector<std::string> vertices,
                                 const std::vector<std::pair<std::string, std::string>>& edges) {
  for (const auto& n : vertices) check_name_relaxed(n);
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) {
      fail(errc::duplicate_vertex, "vertex '" + vertices[i] + "' declared twice");
    }
  }
  names_ = std::move(vertices);
  const std::size_t n = names_.size();
  adj_.assign(n * n, 0);
  for (const auto& [a, b] : edges) {
    const int u = index(a);
    const int v = index(b);
    if (u == v) fail(errc::loop_edge, "loop edge at '" + a + "'");
    if (adjacent(u, v)) fail(errc::duplicate_edge, "edge '" + a + "-" + b + "' given twice");
    adj_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
    adj_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
}

std::optional<int> SimplicialGraph::find(const std::string& vertex) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), vertex);
  if (it == names_.end() || *it != vertex) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

int SimplicialGraph::index(const std::string& vertex) const {
  auto i = find(vertex);
  if (!i) fail(errc::unknown_vertex, "unknown vertex '" + vertex + "'");
  return *i;
}

std::vector<int> SimplicialGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < vertex_count(); ++u) {
    if (u != v && adjacent(v, u)) out.push_back(u);
  }
  return out;
}

int SimplicialGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < vertex_count(); ++u) {
    if (u != v && adjacent(v, u)) ++d;
  }
  return d;
}

SimplicialGraph SimplicialGraph::complement() const {
  SimplicialGraph g;
  g.names_ = names_;
  const std::size_t n = names_.size();
  g.adj_.assign(n * n, 0);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v = u + 1; v < vertex_count(); ++v) {
      if (!adjacent(u, v)) {
        g.adj_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
        g.adj_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
        g.edges_.emplace_back(u, v);
      }
    }
  }
  return g;
}

SimplicialGraph SimplicialGraph::induced(const std::vector<int>& keep) const {
  std::vector<std::string> verts;
  verts.reserve(keep.size());
  for (int v : keep) verts.push_back(name(v));
  std::vector<std::pair<std::string, std::string>> es;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) es.emplace_back(name(keep[i]), name(keep[j]));
    }
  }
  return SimplicialGraph(std::move(verts), es);
}

bool SimplicialGraph::triangle_free() const {
  for (const auto& [u, v] : edges_) {
    for (int w = 0; w < vertex_count(); ++w) {
      if (w != u && w != v && adjacent(u, w) && adjacent(v, w)) return false;
    }
  }
  return true;
}

std::vector<int> SimplicialGraph::cone_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (degree(v) == vertex_count() - 1) out.push_back(v);
  }
  return out;
}

bool SimplicialGraph::chordal() const {
  // Maximum cardinality search, then the Tarjan-Yannakakis fill-in check.
  const int n = vertex_count();
  if (n == 0) return true;
  std::vector<int> weight(n, 0), order;
  std::vector<bool> numbered(n, false);
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!numbered[v] && (best == -1 || weight[v] > weight[best])) best = v;
    }
    numbered[best] = true;
    order.push_back(best);
    for (int u = 0; u < n; ++u) {
      if (!numbered[u] && adjacent(best, u)) ++weight[u];
    }
  }
  // order is from last eliminated to first; rank = position in order
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  for (int i = n - 1; i >= 0; --i) {
    const int v = order[i];
    // neighbors of v with smaller rank (numbered earlier by MCS)
    int parent = -1;
    std::vector<int> earlier;
    for (int u = 0; u < n; ++u) {
      if (u != v && adjacent(v, u) && rank[u] < i) {
        earlier.push_back(u);
        if (parent == -1 || rank[u] > rank[parent]) parent = u;
      }
    }
    for (int u : earlier) {
      if (u != parent && !adjacent(u, parent)) return false;
    }
  }
  return true;
}

bool SimplicialGraph::connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int cnt = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int u = 0; u < n; ++u) {
      if (!seen[u] && adjacent(v, u)) {
        seen[u] = true;
        ++cnt;
        q.push(u);
      }
    }
  }
  return cnt == n;
}

bool SimplicialGraph::is_forest() const {
  const int n = vertex_count();
  std::vector<int> parent(n, -2);
  for (int s = 0; s < n; ++s) {
    if (parent[s] != -2) continue;
    parent[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u = 0; u < n; ++u) {
        if (u == v || !adjacent(v, u)) continue;
        if (parent[u] == -2) {
          parent[u] = v;
          q.push(u);
        } else if (parent[v] != u) {
          return false;
        }
      }
    }
  }
  return true;
}

GraphPredicates graph_predicates(const SimplicialGraph& g) {
  GraphPredicates p;
  p.triangle_free = g.triangle_free();
  for (int v : g.cone_vertices()) p.cone_vertices.push_back(g.name(v));
  p.chordal = g.chordal();
  return p;
}

}  // namespace vraag
