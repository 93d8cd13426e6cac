#include "vraag/conditions.hpp"

#include <algorithm>

#include "vraag/errors.hpp"

namespace vraag {

const char* condition_name(ConditionId id) {
  switch (id) {
    case ConditionId::R1: return "R1";
    case ConditionId::R2: return "R2";
    case ConditionId::R3: return "R3";
    case ConditionId::R4: return "R4";
    case ConditionId::R5: return "R5";
    case ConditionId::F1: return "F1";
    case ConditionId::F2: return "F2";
    case ConditionId::TriangleConfig: return "TriangleConfig";
  }
  return "?";
}

std::optional<ConditionId> condition_from_name(const std::string& name) {
  for (ConditionId id : {ConditionId::R1, ConditionId::R2, ConditionId::R3, ConditionId::R4,
                         ConditionId::R5, ConditionId::F1, ConditionId::F2,
                         ConditionId::TriangleConfig}) {
    if (name == condition_name(id)) return id;
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> names_of(const ThetaGraph& theta, const std::vector<int>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(theta.gamma().name(v));
  return out;
}

void require_r1(const ThetaGraph& theta, const char* who) {
  if (!theta.lambda().is_forest()) {
    fail(errc::precondition_r1, std::string(who) + " needs an acyclic lambda graph");
  }
}

// A lambda cycle from a BFS spanning forest plus one non-tree edge.
std::vector<int> find_lambda_cycle(const ThetaGraph& theta) {
  const SimplicialGraph& lam = theta.lambda();
  const int n = lam.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  for (int root = 0; root < n; ++root) {
    if (parent[static_cast<std::size_t>(root)] != -2) continue;
    parent[static_cast<std::size_t>(root)] = -1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int u = 0; u < n; ++u) {
        if (u != v && lam.adjacent(v, u) && parent[static_cast<std::size_t>(u)] == -2) {
          parent[static_cast<std::size_t>(u)] = v;
          queue.push_back(u);
        }
      }
    }
  }
  auto root_path = [&](int v) {
    std::vector<int> p;
    for (int w = v; w != -1; w = parent[static_cast<std::size_t>(w)]) p.push_back(w);
    std::reverse(p.begin(), p.end());
    return p;
  };
  for (const auto& [u, v] : lam.edges()) {
    if (parent[static_cast<std::size_t>(u)] == v || parent[static_cast<std::size_t>(v)] == u) {
      continue;  // tree edge
    }
    auto pu = root_path(u);
    auto pv = root_path(v);
    if (pu[0] != pv[0]) continue;  // different trees (cannot happen for an edge)
    std::size_t common = 0;
    while (common + 1 < pu.size() && common + 1 < pv.size() && pu[common + 1] == pv[common + 1]) {
      ++common;
    }
    std::vector<int> cyc(pu.begin() + static_cast<std::ptrdiff_t>(common), pu.end());
    for (std::size_t i = pv.size(); i-- > common + 1;) cyc.push_back(pv[i]);
    return cyc;
  }
  return {};
}

struct SquareSides {
  std::vector<int> side_a;  // two vertices, one component
  std::vector<int> side_b;  // two vertices, the other component
};

SquareSides square_sides(const TwoComponentCycle& sq) {
  return SquareSides{{sq.vertices[0], sq.vertices[2]}, {sq.vertices[1], sq.vertices[3]}};
}

std::vector<int> graph_vertex_ids(const ThetaGraph& theta, const SimplicialGraph& sub) {
  std::vector<int> out;
  for (const auto& n : sub.vertex_names()) out.push_back(theta.gamma().index(n));
  return out;
}

bool joined(const ThetaGraph& theta, const std::vector<int>& A, const std::vector<int>& B,
            std::pair<int, int>* missing) {
  for (int u : A) {
    for (int v : B) {
      if (!theta.gamma().adjacent(u, v)) {
        if (missing) *missing = {u, v};
        return false;
      }
    }
  }
  return true;
}

}  // namespace

ConditionReport check_R1(const ThetaGraph& theta) {
  ConditionReport rep;
  rep.condition = ConditionId::R1;
  rep.passed = theta.lambda().is_forest();
  if (!rep.passed) {
    Witness w;
    w.kind = "lambda_cycle";
    w.cycle = names_of(theta, find_lambda_cycle(theta));
    w.detail = "lambda contains a cycle";
    rep.witness = std::move(w);
  }
  return rep;
}

ConditionReport check_R2(const ThetaGraph& theta) {
  ConditionReport rep;
  rep.condition = ConditionId::R2;
  rep.passed = true;
  const auto& g = theta.gamma();
  for (const auto& comp : theta.component_vertices()) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        if (g.adjacent(comp[i], comp[j])) {
          rep.passed = false;
          Witness w;
          w.kind = "gamma_edge_within_component";
          w.pair = names_of(theta, {comp[i], comp[j]});
          w.detail = "gamma edge joins two vertices of one lambda component";
          rep.witness = std::move(w);
          return rep;
        }
      }
    }
  }
  return rep;
}

ConditionReport check_R3(const ThetaGraph& theta) {
  require_r1(theta, "R3");
  ConditionReport rep;
  rep.condition = ConditionId::R3;
  rep.passed = true;
  for (int ci = 0; ci < theta.component_count(); ++ci) {
    for (int di = ci + 1; di < theta.component_count(); ++di) {
      for (const auto& sq : enumerate_two_component_squares(theta, ci, di)) {
        const auto sides = square_sides(sq);
        const auto hull_c = graph_vertex_ids(theta, lambda_convex_hull(theta, sides.side_a));
        const auto hull_d = graph_vertex_ids(theta, lambda_convex_hull(theta, sides.side_b));
        std::pair<int, int> missing;
        if (!joined(theta, hull_c, hull_d, &missing)) {
          rep.passed = false;
          Witness w;
          w.kind = "missing_join";
          w.square = names_of(theta, sq.vertices);
          w.pair = names_of(theta, {missing.first, missing.second});
          w.context = names_of(theta, hull_c);
          for (const auto& n : names_of(theta, hull_d)) w.context.push_back(n);
          w.detail = "hull join is incomplete at this square";
          rep.witness = std::move(w);
          return rep;
        }
      }
    }
  }
  return rep;
}

ConditionReport check_R4(const ThetaGraph& theta, const Caps& caps) {
  require_r1(theta, "R4");
  ConditionReport rep;
  rep.condition = ConditionId::R4;
  rep.passed = true;
  for (int ci = 0; ci < theta.component_count() && rep.passed; ++ci) {
    for (int di = ci + 1; di < theta.component_count() && rep.passed; ++di) {
      const auto enumeration = enumerate_two_component_cycles(theta, ci, di, caps.cycle_max_len,
                                                              caps.cycle_max_count);
      rep.truncated = rep.truncated || enumeration.truncated;
      for (const auto& cyc : enumeration.cycles) {
        std::vector<int> cs, ds;
        for (std::size_t i = 0; i < cyc.vertices.size(); ++i) {
          (i % 2 == 0 ? cs : ds).push_back(cyc.vertices[i]);
        }
        const auto hull_c = graph_vertex_ids(theta, lambda_convex_hull(theta, cs));
        const auto hull_d = graph_vertex_ids(theta, lambda_convex_hull(theta, ds));
        const std::size_t len = cyc.vertices.size();
        for (std::size_t i = 0; i < len; ++i) {
          const int x = cyc.vertices[i];
          const int y = cyc.vertices[(i + 1) % len];
          const int uc = (i % 2 == 0) ? x : y;  // the comp_c endpoint of this edge
          const int ud = (i % 2 == 0) ? y : x;
          bool covered = false;
          for (int c2 : hull_c) {
            if (c2 == uc || covered) continue;
            for (int d2 : hull_d) {
              if (d2 == ud) continue;
              if (theta.gamma().adjacent(ud, c2) && theta.gamma().adjacent(c2, d2) &&
                  theta.gamma().adjacent(d2, uc)) {
                covered = true;
                break;
              }
            }
          }
          if (!covered) {
            rep.passed = false;
            Witness w;
            w.kind = "uncovered_cycle_edge";
            w.cycle = names_of(theta, cyc.vertices);
            w.pair = names_of(theta, {x, y});
            w.detail = "cycle edge lies in no 2-component square inside the hulls";
            rep.witness = std::move(w);
            break;
          }
        }
        if (!rep.passed) break;
      }
    }
  }
  return rep;
}

ConditionReport check_R5(const ThetaGraph& theta) {
  require_r1(theta, "R5");
  ConditionReport rep;
  rep.condition = ConditionId::R5;
  rep.passed = true;
  if (theta.component_count() < 3) return rep;
  const auto& g = theta.gamma();
  const auto& comps = theta.component_vertices();
  for (int ci = 0; ci < theta.component_count(); ++ci) {
    for (int di = ci + 1; di < theta.component_count(); ++di) {
      const auto squares = enumerate_two_component_squares(theta, ci, di);
      if (squares.empty()) continue;
      for (int ai = 0; ai < theta.component_count(); ++ai) {
        if (ai == ci || ai == di) continue;
        for (const auto& sq : squares) {
          const auto sides = square_sides(sq);
          // (side_a, side_b) and the swapped roles both instantiate the
          // condition's (c,c') / (d,d') pairs.
          for (int flip = 0; flip < 2; ++flip) {
            const auto& Cpair = flip == 0 ? sides.side_a : sides.side_b;
            const auto& Dpair = flip == 0 ? sides.side_b : sides.side_a;
            for (int a : comps[static_cast<std::size_t>(ai)]) {
              if (!g.adjacent(a, Cpair[0]) || !g.adjacent(a, Cpair[1])) continue;
              for (int a2 : comps[static_cast<std::size_t>(ai)]) {
                if (!g.adjacent(a2, Dpair[0]) || !g.adjacent(a2, Dpair[1])) continue;
                const auto hull_a = lambda_convex_hull(theta, a == a2
                                                                  ? std::vector<int>{a}
                                                                  : std::vector<int>{a, a2});
                const auto hull_c = graph_vertex_ids(theta, lambda_convex_hull(theta, Cpair));
                const auto hull_d = graph_vertex_ids(theta, lambda_convex_hull(theta, Dpair));
                for (const auto& [xe, ye] : hull_a.edges()) {
                  const std::vector<int> xs{theta.gamma().index(hull_a.name(xe)),
                                            theta.gamma().index(hull_a.name(ye))};
                  if (!joined(theta, xs, hull_c, nullptr) && !joined(theta, xs, hull_d, nullptr)) {
                    rep.passed = false;
                    Witness w;
                    w.kind = "r5_configuration";
                    w.square = names_of(theta, sq.vertices);
                    w.pair = names_of(theta, xs);
                    w.context = names_of(theta, {a, a2});
                    w.detail = "lambda edge of the a-hull joins neither hull completely";
                    rep.witness = std::move(w);
                    return rep;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

ConditionReport check_triangle_config(const ThetaGraph& theta) {
  require_r1(theta, "TriangleConfig");
  ConditionReport rep;
  rep.condition = ConditionId::TriangleConfig;
  rep.passed = true;
  if (theta.component_count() < 3) return rep;
  for (int ci = 0; ci < theta.component_count(); ++ci) {
    for (int di = ci + 1; di < theta.component_count(); ++di) {
      const auto squares = enumerate_two_component_squares(theta, ci, di);
      if (squares.empty()) continue;
      for (int ai = 0; ai < theta.component_count(); ++ai) {
        if (ai == ci || ai == di) continue;
        for (const auto& sq : squares) {
          const auto sides = square_sides(sq);
          const int compC = theta.component_of(sides.side_a[0]);
          const int compD = theta.component_of(sides.side_b[0]);
          if (alternating_path_exists(theta, compC, ai, sides.side_a[0], sides.side_a[1]) &&
              alternating_path_exists(theta, compD, ai, sides.side_b[0], sides.side_b[1])) {
            rep.passed = false;
            Witness w;
            w.kind = "triangle_configuration";
            w.square = names_of(theta, sq.vertices);
            w.pair = names_of(theta, {sides.side_a[0], sides.side_a[1]});
            w.context = names_of(theta, {sides.side_b[0], sides.side_b[1]});
            w.detail = "square with alternating paths through component " + std::to_string(ai);
            rep.witness = std::move(w);
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

ConditionReport check_F1(const ThetaGraph& theta) {
  ConditionReport rep;
  rep.condition = ConditionId::F1;
  rep.passed = true;
  const auto cones = theta.gamma().cone_vertices();
  for (int v = 0; v < theta.gamma().vertex_count(); ++v) {
    if (theta.component_of(v) != -1) continue;
    if (std::find(cones.begin(), cones.end(), v) != cones.end()) continue;
    rep.passed = false;
    Witness w;
    w.kind = "uncovered_vertex";
    w.pair = names_of(theta, {v});
    w.detail = "non-cone vertex lies on no lambda edge";
    rep.witness = std::move(w);
    return rep;
  }
  return rep;
}

ConditionReport check_F2(const ThetaGraph& theta) {
  ConditionReport rep;
  rep.condition = ConditionId::F2;
  rep.passed = true;
  const auto& comps = theta.component_vertices();
  for (int i = 0; i < theta.component_count(); ++i) {
    for (int j = i + 1; j < theta.component_count(); ++j) {
      for (int s : comps[static_cast<std::size_t>(i)]) {
        for (int t : comps[static_cast<std::size_t>(j)]) {
          if (!exists_two_component_path(theta, i, j, s, t)) {
            rep.passed = false;
            Witness w;
            w.kind = "disconnected_pair";
            w.pair = names_of(theta, {s, t});
            w.detail = "no alternating path between the components joins this pair";
            rep.witness = std::move(w);
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

ConditionReport run_condition(ConditionId id, const ThetaGraph& theta, const Caps& caps) {
  switch (id) {
    case ConditionId::R1: return check_R1(theta);
    case ConditionId::R2: return check_R2(theta);
    case ConditionId::R3: return check_R3(theta);
    case ConditionId::R4: return check_R4(theta, caps);
    case ConditionId::R5: return check_R5(theta);
    case ConditionId::F1: return check_F1(theta);
    case ConditionId::F2: return check_F2(theta);
    case ConditionId::TriangleConfig: return check_triangle_config(theta);
  }
  fail(errc::internal, "unknown condition");
}

}  // namespace vraag
