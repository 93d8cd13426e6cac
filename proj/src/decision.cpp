#include "vraag/decision.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "vraag/completion.hpp"
#include "vraag/errors.hpp"

namespace vraag {

const char* answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "?";
}

std::vector<GroupWord> lambda_assignment(const ThetaGraph& theta) {
  std::vector<GroupWord> out;
  for (std::size_t e = 0; e < theta.lambda_edges().size(); ++e) {
    out.push_back(lambda_edge_element(theta, static_cast<int>(e)));
  }
  return out;
}

std::optional<std::vector<Letter>> kernel_search(const SimplicialGraph& delta,
                                                 const std::vector<GroupWord>& assignment,
                                                 std::size_t max_len) {
  const int k = delta.vertex_count();
  if (static_cast<int>(assignment.size()) != k) {
    fail(errc::bad_params, "assignment size does not match delta");
  }
  if (k == 0) return std::nullopt;
  const SimplicialGraph& ambient = assignment[0].ambient();
  const bool involutive = assignment[0].involutive();

  std::vector<std::vector<Letter>> img(static_cast<std::size_t>(2 * k));
  std::size_t maxgain = 1;
  for (int i = 0; i < k; ++i) {
    if (!assignment[static_cast<std::size_t>(i)].same_ambient(assignment[0])) {
      fail(errc::ambient_mismatch, "assignment words over different groups");
    }
    GroupWord r = reduce(assignment[static_cast<std::size_t>(i)]);
    if (r.empty()) {
      fail(errc::assignment_trivial_image,
           "generator '" + delta.name(i) + "' maps to the identity");
    }
    img[static_cast<std::size_t>(2 * i)] = r.letters();
    img[static_cast<std::size_t>(2 * i + 1)] = r.inverse().letters();
    maxgain = std::max(maxgain, r.size());
  }

  // Iterative deepening over canonical delta words, extending in letter
  // order; the first witness is length-minimal and lexicographically least.
  std::vector<Letter> word;
  std::vector<std::vector<Letter>> image_stack(max_len + 1);

  auto dfs = [&](auto&& self, std::size_t depth, std::size_t target) -> bool {
    const auto& cur = image_stack[depth];
    if (depth == target) return cur.empty() && !word.empty();
    if (cur.size() > maxgain * (target - depth)) return false;  // cannot cancel in time
    for (int g = 0; g < k; ++g) {
      for (int sign = 1; sign >= -1; sign -= 2) {
        const Letter x{g, sign};
        if (!wordops::extend_canonical(delta, false, word, x)) continue;
        word.push_back(x);
        auto& next = image_stack[depth + 1];
        next = cur;
        wordops::append_word(ambient, involutive, next,
                             img[static_cast<std::size_t>(2 * g + (sign < 0 ? 1 : 0))]);
        if (self(self, depth + 1, target)) return true;
        word.pop_back();
      }
    }
    return false;
  };

  for (std::size_t target = 1; target <= max_len; ++target) {
    word.clear();
    image_stack[0].clear();
    if (dfs(dfs, 0, target)) return word;
  }
  return std::nullopt;
}

namespace {

std::optional<LambdaWord> kernel_witness_for(const std::shared_ptr<const ThetaGraph>& theta,
                                             const CommutingGraph& delta, std::size_t depth) {
  const auto assignment = lambda_assignment(*theta);
  if (assignment.empty()) return std::nullopt;
  auto found = kernel_search(delta.graph, assignment, depth);
  if (!found) return std::nullopt;
  // Delta vertex order and lambda edge order agree (both sorted by the
  // joined edge name); still translate through the endpoint table.
  std::map<std::pair<int, int>, int> edge_index;
  for (std::size_t e = 0; e < theta->lambda_edges().size(); ++e) {
    edge_index[theta->lambda_edges()[e]] = static_cast<int>(e);
  }
  std::vector<LambdaLetter> ls;
  for (const Letter& l : *found) {
    ls.push_back(LambdaLetter{edge_index.at(delta.endpoint_of[static_cast<std::size_t>(l.gen)]),
                              l.sign});
  }
  LambdaWord w(theta, std::move(ls));
  // Emit only checked certificates: nontrivial over delta, trivial in the
  // ambient Coxeter group.
  GroupWord over_delta(std::make_shared<SimplicialGraph>(delta.graph), false, *found);
  if (reduce(over_delta).empty()) fail(errc::internal, "kernel witness trivial over delta");
  if (!reduce(w.expand()).empty()) fail(errc::internal, "kernel witness not in the kernel");
  return w;
}

bool any_failed(const std::vector<ConditionReport>& reps) {
  return std::any_of(reps.begin(), reps.end(), [](const auto& r) { return !r.passed; });
}

bool any_truncated(const std::vector<ConditionReport>& reps) {
  return std::any_of(reps.begin(), reps.end(), [](const auto& r) { return r.truncated; });
}

const ConditionReport* first_failed(const std::vector<ConditionReport>& reps) {
  for (const auto& r : reps) {
    if (!r.passed) return &r;
  }
  return nullptr;
}

}  // namespace

Verdict decide_raag_system(std::shared_ptr<const ThetaGraph> theta, const Caps& caps) {
  Verdict v;
  const ThetaGraph& th = *theta;
  const auto r1 = check_R1(th);
  v.basis.push_back(r1);
  v.basis.push_back(check_R2(th));
  if (r1.passed) {
    v.basis.push_back(check_R3(th));
    v.basis.push_back(check_R4(th, caps));
    if (th.component_count() >= 3) {
      v.basis.push_back(check_R5(th));
      v.basis.push_back(check_triangle_config(th));
    }
  }

  const bool few_components = th.component_count() <= 2;
  bool is_no = false;
  for (const auto& rep : v.basis) {
    if (rep.condition == ConditionId::TriangleConfig) {
      if (!rep.passed && th.gamma().triangle_free()) is_no = true;
    } else if (!rep.passed) {
      is_no = true;
    }
  }

  if (is_no) {
    v.answer = Answer::No;
    for (const auto& rep : v.basis) {
      if (rep.passed) continue;
      if (rep.condition == ConditionId::TriangleConfig && !th.gamma().triangle_free()) continue;
      v.condition_witness = rep.witness;
      break;
    }
    v.kernel_witness = kernel_witness_for(theta, commuting_graph(th), caps.kernel_depth);
    if (!v.kernel_witness) {
      v.notes.push_back("no kernel witness within depth " + std::to_string(caps.kernel_depth) +
                        "; the failed condition certifies the verdict");
    }
    return v;
  }

  if (!few_components) {
    v.answer = Answer::Unknown;
    v.notes.push_back(
        "three or more lambda components: R1-R5 and the triangle configuration are necessary "
        "but no sufficient criterion is known");
    return v;
  }

  if (any_truncated(v.basis)) {
    v.answer = Answer::Unknown;
    v.notes.push_back("cycle enumeration truncated; R4 pass is not theorem-grade");
    return v;
  }

  v.answer = Answer::Yes;
  return v;
}

VirtuallyFreeReport virtually_free_report(const SimplicialGraph& gamma) {
  VirtuallyFreeReport rep;
  if (gamma.triangle_free()) {
    rep.virtually_free = gamma.is_forest();
    rep.caveat = false;
  } else {
    rep.virtually_free = gamma.chordal();
    rep.caveat = true;
  }
  return rep;
}

Verdict decide_finite_index_raag(std::shared_ptr<const ThetaGraph> theta, const Caps& caps) {
  const ThetaGraph& th = *theta;
  if (!th.gamma().triangle_free()) {
    fail(errc::not_triangle_free, "finite-index decision requires triangle-free gamma");
  }
  Verdict v;
  const auto r1 = check_R1(th);
  v.basis.push_back(r1);
  v.basis.push_back(check_R2(th));
  if (r1.passed) {
    v.basis.push_back(check_R3(th));
    v.basis.push_back(check_R4(th, caps));
  }
  v.basis.push_back(check_F1(th));
  v.basis.push_back(check_F2(th));

  if (th.component_count() > 2) {
    v.answer = Answer::No;
    v.notes.push_back("lambda has more than two components");
    if (const auto* f = first_failed(v.basis)) {
      v.condition_witness = f->witness;
    } else {
      Witness w;
      w.kind = "component_count";
      for (const auto& comp : th.component_vertices()) {
        w.context.push_back(th.gamma().name(comp.front()));
      }
      w.detail = std::to_string(th.component_count()) +
                 " lambda components; finite index needs at most two";
      v.condition_witness = std::move(w);
    }
    return v;
  }
  if (any_failed(v.basis)) {
    v.answer = Answer::No;
    v.condition_witness = first_failed(v.basis)->witness;
    return v;
  }
  if (any_truncated(v.basis)) {
    v.answer = Answer::Unknown;
    v.notes.push_back("cycle enumeration truncated; R4 pass is not theorem-grade");
    return v;
  }

  v.answer = Answer::Yes;

  IndexReport ir;
  const auto cones = th.gamma().cone_vertices();
  ir.cone_vertices = cones.size();
  const std::size_t k = static_cast<std::size_t>(th.component_count());
  ir.expected_index = (std::size_t{1} << k) << cones.size();
  const auto vf = virtually_free_report(th.gamma());
  ir.virtually_free = vf.virtually_free;
  ir.virtually_free_caveat = vf.caveat;

  // The index theorem's completion lives over gamma minus its cone vertices
  // (a cone vertex lies on no lambda edge and contributes a factor of two).
  std::shared_ptr<const ThetaGraph> omega_theta = theta;
  if (!cones.empty()) {
    std::vector<int> keep;
    for (int u = 0; u < th.gamma().vertex_count(); ++u) {
      if (std::find(cones.begin(), cones.end(), u) == cones.end()) keep.push_back(u);
    }
    std::vector<std::pair<std::string, std::string>> les;
    for (const auto& [a, b] : th.lambda().edges()) {
      les.emplace_back(th.gamma().name(a), th.gamma().name(b));
    }
    omega_theta = std::make_shared<const ThetaGraph>(th.gamma().induced(keep), les);
  }
  const auto completion = build_completion(*omega_theta, caps.cell_cap);
  ir.omega_saturated = completion.saturated;
  if (completion.saturated) {
    const auto omega = omega_index_report(completion, omega_theta->gamma());
    ir.omega_vertices = omega.vertex_count;
    ir.full_valence = omega.full_valence;
    if (omega.index) ir.index = *omega.index << cones.size();
    if (!ir.index || *ir.index != ir.expected_index) {
      fail(errc::internal, "completion index disagrees with the expected 2^k index");
    }
  } else {
    v.notes.push_back("completion hit the cell cap; index unverified");
  }
  v.index_report = ir;
  return v;
}

DeletionReport deletion_condition_test(const std::vector<GroupWord>& generators,
                                       std::size_t samples, std::size_t max_word_len,
                                       std::uint64_t seed) {
  DeletionReport rep;
  if (generators.empty() || max_word_len == 0) return rep;
  const SimplicialGraph& ambient = generators[0].ambient();
  const bool involutive = generators[0].involutive();
  const int k = static_cast<int>(generators.size());

  std::vector<std::vector<Letter>> img(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) {
    GroupWord r = reduce(generators[static_cast<std::size_t>(i)]);
    if (r.empty()) fail(errc::assignment_trivial_image, "trivial generator");
    img[static_cast<std::size_t>(2 * i)] = r.letters();
    img[static_cast<std::size_t>(2 * i + 1)] = r.inverse().letters();
  }

  auto image_of = [&](const std::vector<Letter>& sword) {
    std::vector<Letter> acc;
    for (const Letter& l : sword) {
      wordops::append_word(ambient, involutive, acc,
                           img[static_cast<std::size_t>(2 * l.gen + (l.sign < 0 ? 1 : 0))]);
    }
    wordops::lex_least_shuffle(ambient, acc);
    return acc;
  };
  auto key_of = [&](const std::vector<Letter>& image) {
    std::string s;
    for (const Letter& l : image) {
      s += std::to_string(l.gen);
      s += l.sign < 0 ? '-' : '+';
    }
    return s;
  };

  // Shortest S-length of every element reachable in < max_word_len letters,
  // by breadth-first products.
  std::map<std::string, std::size_t> min_len{{std::string(), 0}};
  std::vector<std::vector<Letter>> frontier{{}};
  for (std::size_t len = 1; len + 1 <= max_word_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : frontier) {
      for (int g = 0; g < k; ++g) {
        for (int sign = 1; sign >= -1; sign -= 2) {
          auto w2 = w;
          w2.push_back(Letter{g, sign});
          const auto key = key_of(image_of(w2));
          if (min_len.emplace(key, len).second) next.push_back(std::move(w2));
        }
      }
    }
    frontier = std::move(next);
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len_dist(1, max_word_len);
  std::uniform_int_distribution<int> gen_dist(0, k - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);

  for (std::size_t trial = 0; trial < samples; ++trial) {
    const std::size_t len = len_dist(rng);
    std::vector<Letter> w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(Letter{gen_dist(rng), sign_dist(rng) == 0 ? 1 : -1});
    }
    ++rep.samples;
    const auto image = image_of(w);
    const auto it = min_len.find(key_of(image));
    if (it == min_len.end() || it->second >= w.size()) continue;  // geodesic as far as known
    ++rep.non_geodesic;
    bool deletion_found = false;
    for (std::size_t i = 0; i < w.size() && !deletion_found; ++i) {
      for (std::size_t j = i + 1; j < w.size() && !deletion_found; ++j) {
        std::vector<Letter> shorter;
        for (std::size_t t = 0; t < w.size(); ++t) {
          if (t != i && t != j) shorter.push_back(w[t]);
        }
        if (image_of(shorter) == image) deletion_found = true;
      }
    }
    if (!deletion_found) rep.counterexamples.push_back(w);
  }
  return rep;
}

}  // namespace vraag
