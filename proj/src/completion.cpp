#include "vraag/completion.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "vraag/errors.hpp"

namespace vraag {

namespace {

struct Builder {
  const SimplicialGraph& gamma;
  std::size_t cell_cap;
  std::optional<std::uint64_t> seed;
  std::mt19937_64 rng;

  std::vector<int> vparent;
  std::vector<int> eparent;
  struct E {
    int a, b, label;
    bool alive;
  };
  struct Sq {
    std::array<int, 4> e;
    std::array<int, 4> v;
    bool alive;
  };
  std::vector<E> edges;
  std::vector<Sq> squares;
  std::vector<std::vector<int>> incident;  // vertex root -> edge ids (lazy)
  std::size_t vcount = 0, ecount = 0, sqcount = 0;
  int basepoint = 0;
  bool capped = false;

  Builder(const SimplicialGraph& g, std::size_t cap, std::optional<std::uint64_t> s)
      : gamma(g), cell_cap(cap), seed(s), rng(s.value_or(0)) {}

  int newv() {
    vparent.push_back(static_cast<int>(vparent.size()));
    incident.emplace_back();
    ++vcount;
    return static_cast<int>(vparent.size()) - 1;
  }

  int newe(int a, int b, int label) {
    const int id = static_cast<int>(edges.size());
    edges.push_back(E{a, b, label, true});
    eparent.push_back(id);
    incident[static_cast<std::size_t>(findv(a))].push_back(id);
    if (findv(b) != findv(a)) incident[static_cast<std::size_t>(findv(b))].push_back(id);
    ++ecount;
    return id;
  }

  int findv(int v) {
    while (vparent[static_cast<std::size_t>(v)] != v) {
      vparent[static_cast<std::size_t>(v)] =
          vparent[static_cast<std::size_t>(vparent[static_cast<std::size_t>(v)])];
      v = vparent[static_cast<std::size_t>(v)];
    }
    return v;
  }

  int finde(int e) {
    while (eparent[static_cast<std::size_t>(e)] != e) {
      eparent[static_cast<std::size_t>(e)] =
          eparent[static_cast<std::size_t>(eparent[static_cast<std::size_t>(e)])];
      e = eparent[static_cast<std::size_t>(e)];
    }
    return e;
  }

  bool over_cap() const { return vcount + ecount + sqcount > cell_cap; }

  // Merge vertex roots; the surviving root keeps the union of incidences.
  int unite_vertices(int a, int b) {
    a = findv(a);
    b = findv(b);
    if (a == b) return a;
    if (incident[static_cast<std::size_t>(a)].size() < incident[static_cast<std::size_t>(b)].size()) {
      std::swap(a, b);
    }
    vparent[static_cast<std::size_t>(b)] = a;
    auto& ia = incident[static_cast<std::size_t>(a)];
    auto& ib = incident[static_cast<std::size_t>(b)];
    ia.insert(ia.end(), ib.begin(), ib.end());
    ib.clear();
    --vcount;
    return a;
  }

  // Live edges at a vertex root, deduplicated by edge root.
  std::vector<int> edges_at(int vroot) {
    auto& list = incident[static_cast<std::size_t>(vroot)];
    std::vector<int> out;
    std::set<int> seen;
    for (int e : list) {
      const int r = finde(e);
      if (!edges[static_cast<std::size_t>(r)].alive) continue;
      const int ar = findv(edges[static_cast<std::size_t>(r)].a);
      const int br = findv(edges[static_cast<std::size_t>(r)].b);
      if (ar != vroot && br != vroot) continue;  // stale entry
      if (seen.insert(r).second) out.push_back(r);
    }
    list.assign(out.begin(), out.end());
    return out;
  }

  int other_end(int eroot, int vroot) {
    const auto& e = edges[static_cast<std::size_t>(eroot)];
    const int ar = findv(e.a);
    const int br = findv(e.b);
    return ar == vroot ? br : ar;
  }

  // Fold all coincident same-label edge pairs to a fixed point.
  bool fold_to_fixpoint() {
    bool changed = false;
    std::vector<int> work;
    for (int v = 0; v < static_cast<int>(vparent.size()); ++v) {
      if (findv(v) == v) work.push_back(v);
    }
    if (seed) std::shuffle(work.begin(), work.end(), rng);
    while (!work.empty()) {
      if (over_cap()) return changed;
      const int v = findv(work.back());
      work.pop_back();
      if (findv(v) != v) continue;
      auto here = edges_at(v);
      bool folded = false;
      for (std::size_t i = 0; i < here.size() && !folded; ++i) {
        for (std::size_t j = i + 1; j < here.size() && !folded; ++j) {
          const int e1 = here[i];
          const int e2 = here[j];
          if (edges[static_cast<std::size_t>(e1)].label !=
              edges[static_cast<std::size_t>(e2)].label) {
            continue;
          }
          // identify e2 with e1 and their far endpoints
          const int a = other_end(e1, v);
          const int b = other_end(e2, v);
          eparent[static_cast<std::size_t>(e2)] = e1;
          edges[static_cast<std::size_t>(e2)].alive = false;
          --ecount;
          if (a != b) {
            const int m = unite_vertices(a, b);
            work.push_back(m);
          }
          work.push_back(v);
          folded = true;
          changed = true;
        }
      }
    }
    return changed;
  }

  // Merge squares with the same canonicalized boundary edge multiset.
  bool identify_squares() {
    std::map<std::array<int, 4>, int> canon;
    bool changed = false;
    for (int s = 0; s < static_cast<int>(squares.size()); ++s) {
      auto& sq = squares[static_cast<std::size_t>(s)];
      if (!sq.alive) continue;
      std::array<int, 4> key;
      for (int i = 0; i < 4; ++i) key[static_cast<std::size_t>(i)] = finde(sq.e[static_cast<std::size_t>(i)]);
      std::sort(key.begin(), key.end());
      auto [it, inserted] = canon.try_emplace(key, s);
      if (!inserted) {
        sq.alive = false;
        --sqcount;
        changed = true;
      }
    }
    return changed;
  }

  // Corner registry: (vertex root, unordered incident boundary edge roots).
  std::set<std::tuple<int, int, int>> corners() {
    std::set<std::tuple<int, int, int>> out;
    for (const auto& sq : squares) {
      if (!sq.alive) continue;
      for (int i = 0; i < 4; ++i) {
        const int vr = findv(sq.v[static_cast<std::size_t>(i)]);
        const int e1 = finde(sq.e[static_cast<std::size_t>((i + 3) % 4)]);
        const int e2 = finde(sq.e[static_cast<std::size_t>(i)]);
        out.emplace(vr, std::min(e1, e2), std::max(e1, e2));
      }
    }
    return out;
  }

  std::size_t attach_squares() {
    const auto registry = corners();
    struct Cand {
      int v, e1, e2;
    };
    std::vector<Cand> cands;
    std::vector<int> roots;
    for (int v = 0; v < static_cast<int>(vparent.size()); ++v) {
      if (findv(v) == v) roots.push_back(v);
    }
    if (seed) std::shuffle(roots.begin(), roots.end(), rng);
    for (int v : roots) {
      auto here = edges_at(v);
      for (std::size_t i = 0; i < here.size(); ++i) {
        for (std::size_t j = i + 1; j < here.size(); ++j) {
          const int l1 = edges[static_cast<std::size_t>(here[i])].label;
          const int l2 = edges[static_cast<std::size_t>(here[j])].label;
          if (l1 == l2 || !gamma.adjacent(l1, l2)) continue;
          const int lo = std::min(here[i], here[j]);
          const int hi = std::max(here[i], here[j]);
          if (registry.count({v, lo, hi})) continue;
          cands.push_back(Cand{v, here[i], here[j]});
        }
      }
    }
    std::size_t attached = 0;
    for (const auto& c : cands) {
      if (over_cap()) break;
      const int f1 = finde(c.e1);
      const int f2 = finde(c.e2);
      const int u = findv(c.v);
      const int a = other_end(f1, u);
      const int b = other_end(f2, u);
      const int s1 = edges[static_cast<std::size_t>(f1)].label;
      const int s2 = edges[static_cast<std::size_t>(f2)].label;
      const int w = newv();
      const int ga = newe(a, w, s2);
      const int gb = newe(b, w, s1);
      squares.push_back(Sq{{f1, ga, gb, f2}, {u, a, w, b}, true});
      ++sqcount;
      ++attached;
    }
    return attached;
  }
};

}  // namespace

CompletionResult build_completion(const ThetaGraph& theta, std::size_t cell_cap,
                                  std::optional<std::uint64_t> shuffle_seed) {
  const SimplicialGraph& gamma = theta.gamma();
  if (!gamma.triangle_free()) {
    fail(errc::not_triangle_free, "completions are built for triangle-free gamma only");
  }
  Builder B(gamma, cell_cap, shuffle_seed);
  B.basepoint = B.newv();

  // The bouquet: one loop per lambda edge, subdivided at a fresh midpoint.
  std::vector<std::size_t> order(theta.lambda_edges().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (shuffle_seed) std::shuffle(order.begin(), order.end(), B.rng);
  for (std::size_t i : order) {
    const auto& [s, t] = theta.lambda_edges()[i];
    const int m = B.newv();
    B.newe(B.basepoint, m, s);
    B.newe(m, B.basepoint, t);
  }

  bool saturated = false;
  while (!B.over_cap()) {
    bool changed = B.fold_to_fixpoint();
    changed = B.identify_squares() || changed;
    if (B.over_cap()) break;
    const std::size_t attached = B.attach_squares();
    if (!changed && attached == 0) {
      saturated = true;
      break;
    }
  }

  CompletionResult out;
  out.saturated = saturated && !B.over_cap();
  out.finite = out.saturated;
  out.cells = B.vcount + B.ecount + B.sqcount;

  // Canonical renumbering: breadth-first from the basepoint, exploring edges
  // in (label, far-endpoint) order.
  std::map<int, int> vid;
  std::vector<int> bfs{B.findv(B.basepoint)};
  vid[B.findv(B.basepoint)] = 0;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const int v = bfs[head];
    auto here = B.edges_at(v);
    std::vector<std::pair<int, int>> by_label;  // (label, edge root)
    for (int e : here) by_label.emplace_back(B.edges[static_cast<std::size_t>(e)].label, e);
    std::sort(by_label.begin(), by_label.end());
    for (const auto& [label, e] : by_label) {
      const int u = B.other_end(e, v);
      if (!vid.count(u)) {
        vid[u] = static_cast<int>(vid.size());
        bfs.push_back(u);
      }
    }
  }
  // Unreached roots (cannot occur for a connected build; kept for safety).
  for (int v = 0; v < static_cast<int>(B.vparent.size()); ++v) {
    if (B.findv(v) == v && !vid.count(v)) {
      vid[v] = static_cast<int>(vid.size());
    }
  }
  out.vertices = vid.size();

  std::map<int, int> eid;
  std::vector<std::pair<std::tuple<int, int, int>, int>> elist;
  for (int e = 0; e < static_cast<int>(B.edges.size()); ++e) {
    if (!B.edges[static_cast<std::size_t>(e)].alive || B.finde(e) != e) continue;
    const auto& ed = B.edges[static_cast<std::size_t>(e)];
    const int x = vid.at(B.findv(ed.a));
    const int y = vid.at(B.findv(ed.b));
    elist.push_back({{std::min(x, y), std::max(x, y), ed.label}, e});
  }
  std::sort(elist.begin(), elist.end());
  for (const auto& [triple, e] : elist) {
    eid[e] = static_cast<int>(out.edges.size());
    out.edges.push_back(triple);
  }

  for (const auto& sq : B.squares) {
    if (!sq.alive) continue;
    std::array<int, 4> ids;
    for (int i = 0; i < 4; ++i) {
      ids[static_cast<std::size_t>(i)] = eid.at(B.finde(sq.e[static_cast<std::size_t>(i)]));
    }
    // minimal rotation/reflection of the boundary sequence
    std::array<int, 4> best = ids;
    for (int r = 0; r < 4; ++r) {
      for (int dir = 0; dir < 2; ++dir) {
        std::array<int, 4> cand;
        for (int i = 0; i < 4; ++i) {
          const int k = dir == 0 ? (r + i) % 4 : (r + 4 - i) % 4;
          cand[static_cast<std::size_t>(i)] = ids[static_cast<std::size_t>(k)];
        }
        if (cand < best) best = cand;
      }
    }
    out.squares.push_back(best);
  }
  std::sort(out.squares.begin(), out.squares.end());
  return out;
}

std::string CompletionResult::canonical_form(const SimplicialGraph& gamma) const {
  std::ostringstream os;
  os << "V " << vertices << '\n';
  for (const auto& [a, b, label] : edges) {
    os << "E " << a << ' ' << b << ' ' << gamma.name(label) << '\n';
  }
  for (const auto& sq : squares) {
    os << "Q " << sq[0] << ' ' << sq[1] << ' ' << sq[2] << ' ' << sq[3] << '\n';
  }
  return os.str();
}

std::string CompletionResult::export_listing(const SimplicialGraph& gamma) const {
  std::ostringstream os;
  os << "vertices: " << vertices << '\n';
  os << "basepoint: 0\n";
  os << "saturated: " << (saturated ? "true" : "false") << '\n';
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& [a, b, label] = edges[e];
    os << "edge " << e << ": " << a << ' ' << b << ' ' << gamma.name(label) << '\n';
  }
  for (const auto& sq : squares) {
    os << "square: " << sq[0] << ' ' << sq[1] << ' ' << sq[2] << ' ' << sq[3] << '\n';
  }
  return os.str();
}

bool CompletionResult::full_valence(const SimplicialGraph& gamma) const {
  std::vector<std::set<int>> labels(vertices);
  for (const auto& [a, b, label] : edges) {
    labels[static_cast<std::size_t>(a)].insert(label);
    labels[static_cast<std::size_t>(b)].insert(label);
  }
  for (const auto& at : labels) {
    if (static_cast<int>(at.size()) != gamma.vertex_count()) return false;
  }
  return true;
}

OmegaReport omega_index_report(const CompletionResult& completion, const SimplicialGraph& gamma) {
  if (!completion.saturated) fail(errc::not_saturated, "completion hit the cell cap");
  OmegaReport rep;
  rep.vertex_count = completion.vertices;
  rep.full_valence = completion.full_valence(gamma);
  if (rep.full_valence) rep.index = completion.vertices;
  return rep;
}

}  // namespace vraag
