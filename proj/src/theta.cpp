#include "vraag/theta.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "vraag/errors.hpp"

namespace vraag {

namespace {

std::vector<int> bfs_distances(const SimplicialGraph& g, int src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (u != v && g.adjacent(v, u) && dist[u] == -1) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

}  // namespace

ThetaGraph::ThetaGraph(SimplicialGraph gamma,
                       const std::vector<std::pair<std::string, std::string>>& lambda_edges) {
  gamma_ = std::make_shared<const SimplicialGraph>(std::move(gamma));
  const SimplicialGraph& g = *gamma_;
  for (const auto& n : g.vertex_names()) check_vertex_name(n);
  for (const auto& [a, b] : lambda_edges) {
    const int u = g.index(a);
    const int v = g.index(b);
    if (u == v) fail(errc::loop_edge, "lambda loop at '" + a + "'");
    if (g.adjacent(u, v)) {
      fail(errc::lambda_not_in_complement,
           "lambda edge '" + a + "-" + b + "' joins gamma-adjacent vertices");
    }
  }
  lambda_ = SimplicialGraph(g.vertex_names(), lambda_edges);

  for (const auto& [u, v] : lambda_.edges()) oriented_.emplace_back(u, v);
  std::sort(oriented_.begin(), oriented_.end());

  component_of_.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (lambda_.degree(s) == 0 || component_of_[static_cast<std::size_t>(s)] != -1) continue;
    const int id = static_cast<int>(components_.size());
    std::vector<int> members;
    std::queue<int> q;
    component_of_[static_cast<std::size_t>(s)] = id;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      members.push_back(v);
      for (int u = 0; u < g.vertex_count(); ++u) {
        if (u != v && lambda_.adjacent(v, u) && component_of_[static_cast<std::size_t>(u)] == -1) {
          component_of_[static_cast<std::size_t>(u)] = id;
          q.push(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components_.push_back(std::move(members));
  }
}

SimplicialGraph ThetaGraph::overlay() const {
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& [u, v] : gamma_->edges()) es.emplace_back(gamma_->name(u), gamma_->name(v));
  for (const auto& [u, v] : lambda_.edges()) es.emplace_back(gamma_->name(u), gamma_->name(v));
  return SimplicialGraph(gamma_->vertex_names(), es);
}

std::string ThetaGraph::lambda_edge_name(int e) const {
  const auto& [a, b] = oriented_[static_cast<std::size_t>(e)];
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  return gamma_->name(lo) + "-" + gamma_->name(hi);
}

ThetaGraph ThetaGraph::with_flipped_orientations(const std::vector<bool>& flip) const {
  if (flip.size() != oriented_.size()) fail(errc::bad_params, "flip mask size mismatch");
  ThetaGraph t(*this);
  for (std::size_t i = 0; i < flip.size(); ++i) {
    if (flip[i]) std::swap(t.oriented_[i].first, t.oriented_[i].second);
  }
  return t;
}

ThetaGraph ThetaGraph::renamed(
    const std::vector<std::pair<std::string, std::string>>& mapping) const {
  std::map<std::string, std::string> m;
  for (const auto& [from, to] : mapping) m[from] = to;
  auto ren = [&](const std::string& s) {
    auto it = m.find(s);
    return it == m.end() ? s : it->second;
  };
  std::vector<std::string> verts;
  for (const auto& n : gamma_->vertex_names()) verts.push_back(ren(n));
  std::vector<std::pair<std::string, std::string>> ges, les;
  for (const auto& [u, v] : gamma_->edges()) {
    ges.emplace_back(ren(gamma_->name(u)), ren(gamma_->name(v)));
  }
  for (const auto& [u, v] : lambda_.edges()) {
    les.emplace_back(ren(gamma_->name(u)), ren(gamma_->name(v)));
  }
  return ThetaGraph(SimplicialGraph(std::move(verts), ges), les);
}

SimplicialGraph lambda_convex_hull(const ThetaGraph& theta, const std::vector<int>& X) {
  const SimplicialGraph& lam = theta.lambda();
  if (X.empty()) return SimplicialGraph({}, {});
  int comp = -1;
  for (int x : X) {
    const int c = theta.component_of(x);
    if (c == -1) {
      fail(errc::vertex_not_in_lambda, "vertex '" + theta.gamma().name(x) + "' lies on no lambda edge");
    }
    if (comp == -1) comp = c;
    if (c != comp) fail(errc::mixed_components, "hull vertices span several lambda components");
  }

  std::set<int> hull(X.begin(), X.end());
  // Distances within lambda, from every current hull member; iterate the
  // interval closure to a fixed point.
  std::map<int, std::vector<int>> dist;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> members(hull.begin(), hull.end());
    for (int u : members) {
      if (!dist.count(u)) dist[u] = bfs_distances(lam, u);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const int u = members[i];
        const int v = members[j];
        const int duv = dist[u][static_cast<std::size_t>(v)];
        for (int w = 0; w < lam.vertex_count(); ++w) {
          if (hull.count(w) || theta.component_of(w) != comp) continue;
          const int a = dist[u][static_cast<std::size_t>(w)];
          const int b = dist[v][static_cast<std::size_t>(w)];
          if (a >= 0 && b >= 0 && a + b == duv) {
            hull.insert(w);
            grew = true;
          }
        }
      }
    }
  }

  std::vector<std::string> verts;
  for (int v : hull) verts.push_back(theta.gamma().name(v));
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& [u, v] : lam.edges()) {
    if (hull.count(u) && hull.count(v)) {
      es.emplace_back(theta.gamma().name(u), theta.gamma().name(v));
    }
  }
  return SimplicialGraph(std::move(verts), es);
}

SimplicialGraph lambda_convex_hull_names(const ThetaGraph& theta,
                                         const std::vector<std::string>& X) {
  std::vector<int> ids;
  for (const auto& n : X) ids.push_back(theta.gamma().index(n));
  return lambda_convex_hull(theta, ids);
}

namespace {

TwoComponentCycle canonical_cycle(const ThetaGraph& theta, const std::vector<int>& verts) {
  const auto& g = theta.gamma();
  const std::size_t n = verts.size();
  std::vector<int> best;
  for (std::size_t r = 0; r < n; ++r) {
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<int> cand(n);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = dir == 0 ? (r + i) % n : (r + n - i) % n;
        cand[i] = verts[k];
      }
      if (best.empty()) {
        best = cand;
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        const auto& a = g.name(cand[i]);
        const auto& b = g.name(best[i]);
        if (a != b) {
          if (a < b) best = cand;
          break;
        }
      }
    }
  }
  TwoComponentCycle c;
  c.vertices = best;
  c.comp_c = theta.component_of(best[0]);
  c.comp_d = theta.component_of(best[1]);
  return c;
}

bool cycle_name_less(const ThetaGraph& theta, const TwoComponentCycle& a,
                     const TwoComponentCycle& b) {
  const auto& g = theta.gamma();
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    const auto& x = g.name(a.vertices[i]);
    const auto& y = g.name(b.vertices[i]);
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

std::vector<TwoComponentCycle> enumerate_two_component_squares(const ThetaGraph& theta,
                                                               int comp_c, int comp_d) {
  if (comp_c == comp_d) fail(errc::bad_params, "square enumeration needs distinct components");
  const auto& g = theta.gamma();
  const auto& cs = theta.component_vertices()[static_cast<std::size_t>(comp_c)];
  const auto& ds = theta.component_vertices()[static_cast<std::size_t>(comp_d)];
  std::vector<TwoComponentCycle> out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      for (std::size_t k = 0; k < ds.size(); ++k) {
        for (std::size_t l = k + 1; l < ds.size(); ++l) {
          const int c1 = cs[i], c2 = cs[j], d1 = ds[k], d2 = ds[l];
          if (g.adjacent(c1, d1) && g.adjacent(d1, c2) && g.adjacent(c2, d2) &&
              g.adjacent(d2, c1)) {
            out.push_back(canonical_cycle(theta, {c1, d1, c2, d2}));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return cycle_name_less(theta, a, b);
  });
  return out;
}

CycleEnumeration enumerate_two_component_cycles(const ThetaGraph& theta, int comp_c, int comp_d,
                                                std::size_t max_len, std::size_t max_count) {
  if (comp_c == comp_d) fail(errc::bad_params, "cycle enumeration needs distinct components");
  const auto& g = theta.gamma();
  // Auxiliary graph H: vertices of the two components, gamma edges between
  // them only. H is bipartite, so every cycle alternates components.
  std::vector<int> verts;
  for (int v : theta.component_vertices()[static_cast<std::size_t>(comp_c)]) verts.push_back(v);
  for (int v : theta.component_vertices()[static_cast<std::size_t>(comp_d)]) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  const std::size_t n = verts.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (theta.component_of(verts[i]) != theta.component_of(verts[j]) &&
          g.adjacent(verts[i], verts[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }

  CycleEnumeration result;
  std::set<std::vector<int>> seen;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  // Anchored DFS: enumerate simple cycles whose smallest H-vertex is the
  // anchor; canonical-form dedup absorbs direction and rotation.
  auto dfs = [&](auto&& self, std::size_t anchor, std::size_t v) -> bool {
    if (result.cycles.size() >= max_count) {
      result.truncated = true;
      return false;
    }
    for (std::size_t u : adj[v]) {
      if (u == anchor && path.size() >= 4) {
        std::vector<int> cyc;
        for (std::size_t p : path) cyc.push_back(verts[p]);
        auto canon = canonical_cycle(theta, cyc);
        if (seen.insert(canon.vertices).second) {
          result.cycles.push_back(std::move(canon));
          if (result.cycles.size() >= max_count) {
            result.truncated = true;
            return false;
          }
        }
      }
      if (u <= anchor || on_path[u]) continue;
      if (path.size() >= max_len) {
        result.truncated = true;  // a longer cycle may have been cut off
        continue;
      }
      path.push_back(u);
      on_path[u] = true;
      const bool keep_going = self(self, anchor, u);
      on_path[u] = false;
      path.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };

  for (std::size_t a = 0; a < n; ++a) {
    path.assign(1, a);
    on_path.assign(n, false);
    on_path[a] = true;
    if (!dfs(dfs, a, a)) break;
  }

  std::sort(result.cycles.begin(), result.cycles.end(), [&](const auto& x, const auto& y) {
    return cycle_name_less(theta, x, y);
  });
  return result;
}

bool alternating_path_exists(const ThetaGraph& theta, int comp_a, int comp_b, int s, int t) {
  if (comp_a == comp_b) fail(errc::bad_params, "path query needs distinct components");
  const auto& g = theta.gamma();
  // BFS in the cross-edge auxiliary graph; alternation is structural.
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::queue<int> q;
  seen[static_cast<std::size_t>(s)] = true;
  q.push(s);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    if (v == t) return true;
    const int cv = theta.component_of(v);
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (seen[static_cast<std::size_t>(u)] || !g.adjacent(v, u)) continue;
      const int cu = theta.component_of(u);
      if ((cv == comp_a && cu == comp_b) || (cv == comp_b && cu == comp_a)) {
        seen[static_cast<std::size_t>(u)] = true;
        q.push(u);
      }
    }
  }
  return false;
}

bool exists_two_component_path(const ThetaGraph& theta, int comp_s, int comp_t, int s, int t) {
  if (comp_s == comp_t) fail(errc::bad_params, "path query needs distinct components");
  if (theta.component_of(s) != comp_s || theta.component_of(t) != comp_t) {
    fail(errc::vertex_not_in_stated_component, "endpoint not in stated component");
  }
  return alternating_path_exists(theta, comp_s, comp_t, s, t);
}

}  // namespace vraag
