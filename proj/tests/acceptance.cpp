// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "vraag/completion.hpp"
#include "vraag/conditions.hpp"
#include "vraag/decision.hpp"
#include "vraag/families.hpp"
#include "vraag/reflections.hpp"

using namespace vraag;

namespace {

int failures = 0;

struct Check {
  std::ostringstream detail;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    failed: " << what << '\n';
    }
  }
};

void run(int id, const std::string& label, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "    exception: " << e.what() << '\n';
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::printf("[%d/9] %-58s %s (%lld ms)\n", id, label.c_str(), c.ok ? "PASS" : "FAIL",
              static_cast<long long>(ms));
  std::fputs(c.detail.str().c_str(), stdout);
  if (!c.ok) ++failures;
}

std::shared_ptr<const ThetaGraph> fam(Family f, int n = 0, int k = 0) {
  return std::make_shared<const ThetaGraph>(make_family(FamilySpec{f, n, k}));
}

// ---------------------------------------------------------------- criterion 1

void criterion1(Check& c) {
  for (int n = 3; n <= 6; ++n) {
    const auto t = fam(Family::gamma_n, n);
    const auto v = decide_raag_system(t);
    c.expect(v.answer == Answer::Yes, "gamma_" + std::to_string(n) + " decide != yes");
    const auto fi = decide_finite_index_raag(t);
    c.expect(fi.answer == Answer::Yes, "gamma_" + std::to_string(n) + " finite-index != yes");
    c.expect(fi.index_report && fi.index_report->index == 4,
             "gamma_" + std::to_string(n) + " index != 4");
    // the commuting graph must be the 2n-cycle: connected, 2-regular, 2n vertices
    const auto delta = commuting_graph(*t);
    bool cycle = delta.graph.vertex_count() == 2 * n && delta.graph.connected();
    for (int u = 0; u < delta.graph.vertex_count(); ++u) {
      cycle = cycle && delta.graph.degree(u) == 2;
    }
    c.expect(cycle, "gamma_" + std::to_string(n) + " commuting graph is not C_" +
                        std::to_string(2 * n));
  }
}

// ---------------------------------------------------------------- criterion 2

void criterion2(Check& c) {
  for (int n = 3; n <= 4; ++n) {
    for (int k = 1; k <= 2; ++k) {
      const auto v = decide_finite_index_raag(fam(Family::delta_nk, n, k));
      const std::string tag = "delta_" + std::to_string(n) + std::to_string(k);
      c.expect(v.answer == Answer::Yes, tag + " != yes");
      c.expect(v.index_report && v.index_report->index == 4, tag + " index != 4");
    }
  }
}

// ---------------------------------------------------------------- criterion 3

void criterion3(Check& c) {
  const auto t = fam(Family::hexagon);
  c.expect(check_R1(*t).passed, "hexagon R1 should pass");
  c.expect(check_R2(*t).passed, "hexagon R2 should pass");
  c.expect(check_R3(*t).passed, "hexagon R3 should pass");
  c.expect(!check_R4(*t).passed, "hexagon R4 should fail");

  const auto delta = commuting_graph(*t);
  const auto witness = kernel_search(delta.graph, lambda_assignment(*t), 8);
  c.expect(witness.has_value(), "no kernel witness at depth 8");
  if (witness) {
    GroupWord over_delta(std::make_shared<SimplicialGraph>(delta.graph), false, *witness);
    c.expect(!reduce(over_delta).empty(), "witness trivial over delta");
    std::vector<LambdaLetter> ls;
    for (const Letter& l : *witness) ls.push_back(LambdaLetter{l.gen, l.sign});
    const LambdaWord lw(t, ls);
    c.expect(reduce(lw.expand()).empty(), "witness image nontrivial in the Coxeter group");
  }
  Caps caps;
  caps.kernel_depth = 8;
  const auto v = decide_raag_system(t, caps);
  c.expect(v.answer == Answer::No, "hexagon decide != no");
  c.expect(v.kernel_witness.has_value() && v.kernel_witness->size() == 8,
           "decide did not attach a length-8 kernel witness");
}

// ---------------------------------------------------------------- criterion 4

void criterion4(Check& c) {
  const auto t = fam(Family::r5_counterexample);
  c.expect(check_R1(*t).passed, "R1 should pass");
  c.expect(check_R2(*t).passed, "R2 should pass");
  c.expect(check_R3(*t).passed, "R3 should pass");
  c.expect(check_R4(*t).passed, "R4 should pass");
  c.expect(!check_R5(*t).passed, "R5 should fail");
  c.expect(decide_raag_system(t).answer == Answer::No, "decide != no");
}

// ---------------------------------------------------------------- criterion 5

void criterion5(Check& c) {
  const Caps caps;
  {
    const auto t = fam(Family::lambda_path_on_edgeless);
    const auto omega = build_completion(*t, caps.cell_cap);
    c.expect(omega.saturated && omega.vertices == 2, "one-component omega != 2 vertices");
    c.expect(omega.cells <= caps.cell_cap, "cell count above cap");
    c.expect(omega.full_valence(t->gamma()), "one-component omega not full valence");
  }
  for (const auto& t : {fam(Family::c4_diagonals), fam(Family::gamma_n, 3)}) {
    const auto omega = build_completion(*t, caps.cell_cap);
    c.expect(omega.saturated, "two-component omega unsaturated");
    c.expect(omega.vertices == 4, "two-component omega != 4 vertices");
    c.expect(omega.full_valence(t->gamma()), "omega not full valence");
    c.expect(omega.cells <= caps.cell_cap, "cell count above cap");
    const auto base = omega.canonical_form(t->gamma());
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      c.expect(build_completion(*t, caps.cell_cap, seed).canonical_form(t->gamma()) == base,
               "fold-order randomization changed omega (seed " + std::to_string(seed) + ")");
    }
  }
}

// ---------------------------------------------------------------- criterion 6

void criterion6(Check& c) {
  long long words_checked = 0;
  for (int n = 1; n <= 4 && c.ok; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    for (std::uint64_t mask = 0; mask < (1ULL << slots.size()) && c.ok; ++mask) {
      std::vector<std::pair<std::string, std::string>> edges;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask >> s & 1) {
          edges.emplace_back(names[static_cast<std::size_t>(slots[s].first)],
                             names[static_cast<std::size_t>(slots[s].second)]);
        }
      }
      const SimplicialGraph g(names, edges);
      for (bool involutive : {true, false}) {
        oracle::Cayley cayley(g, involutive);
        std::vector<Letter> word;
        std::vector<Letter> scratch;
        const int nletters = involutive ? n : 2 * n;
        // the letter-by-letter product path (used by equals and the kernel
        // search) is validated alongside the whole-word reduction
        std::vector<std::vector<Letter>> inc(7);
        // depth-first over every word of length <= 6, carrying the oracle state
        auto walk = [&](auto&& self, int state, int depth) -> bool {
          scratch = word;
          wordops::cancel_to_geodesic(g, involutive, scratch);
          wordops::lex_least_shuffle(g, scratch);
          ++words_checked;
          if (scratch.size() != cayley.distance(state)) return false;
          if (scratch != cayley.key(state)) return false;
          scratch = inc[static_cast<std::size_t>(depth)];
          wordops::lex_least_shuffle(g, scratch);
          if (scratch != cayley.key(state)) return false;
          if (depth == 6) return true;
          for (int code = 0; code < nletters; ++code) {
            const Letter x = involutive ? Letter{code, 1}
                                        : Letter{code / 2, code % 2 ? -1 : 1};
            word.push_back(x);
            inc[static_cast<std::size_t>(depth + 1)] = inc[static_cast<std::size_t>(depth)];
            wordops::append_letter(g, involutive, inc[static_cast<std::size_t>(depth + 1)], x);
            const bool good = self(self, cayley.step(state, x), depth + 1);
            word.pop_back();
            if (!good) return false;
          }
          return true;
        };
        if (!walk(walk, cayley.identity(), 0)) {
          c.expect(false, "mismatch against the Tits-move oracle (n=" + std::to_string(n) +
                              ", graph mask " + std::to_string(mask) +
                              (involutive ? ", racg)" : ", raag)"));
          break;
        }
      }
    }
  }
  c.detail << "    words checked: " << words_checked << '\n';
}

// ---------------------------------------------------------------- criterion 7

void criterion7(Check& c) {
  std::vector<std::shared_ptr<const ThetaGraph>> fixtures{
      fam(Family::gamma_n, 3),     fam(Family::gamma_n, 4),    fam(Family::gamma_n, 5),
      fam(Family::gamma_n, 6),     fam(Family::delta_nk, 3, 1), fam(Family::delta_nk, 3, 2),
      fam(Family::delta_nk, 4, 1), fam(Family::delta_nk, 4, 2), fam(Family::c4_diagonals)};
  for (const auto& t : fixtures) {
    const auto v = decide_finite_index_raag(t);
    if (v.answer != Answer::Yes || t->component_count() != 2) {
      c.expect(false, "fixture is not a 2-component yes instance");
      continue;
    }
    // parity homomorphism onto Z2 x Z2 by lambda-component color
    bool twocolored = true;
    for (const auto& [u, w] : t->gamma().edges()) {
      twocolored = twocolored && t->component_of(u) != -1 && t->component_of(w) != -1 &&
                   t->component_of(u) != t->component_of(w);
    }
    c.expect(twocolored, "gamma is not 2-colored by the lambda components");
    for (std::size_t e = 0; e < t->lambda_edges().size(); ++e) {
      const auto word = lambda_edge_element(*t, static_cast<int>(e));
      int red = 0, blue = 0;
      for (const Letter& l : word.letters()) {
        (t->component_of(l.gen) == 0 ? red : blue) += 1;
      }
      c.expect(red % 2 == 0 && blue % 2 == 0, "lambda edge survives the parity homomorphism");
    }
    std::size_t order = 1;
    bool red_seen = false, blue_seen = false;
    for (int u = 0; u < t->gamma().vertex_count(); ++u) {
      (t->component_of(u) == 0 ? red_seen : blue_seen) = true;
    }
    if (red_seen) order *= 2;
    if (blue_seen) order *= 2;
    c.expect(v.index_report && v.index_report->index == order,
             "parity image order differs from the completion index");
  }
}

// ---------------------------------------------------------------- criterion 8

void criterion8(Check& c) {
  using RawReflection = std::pair<GroupWord, Letter>;
  const auto free2 =
      std::make_shared<const SimplicialGraph>(SimplicialGraph({"a", "b"}, {}));
  const int a = free2->index("a");
  const int b = free2->index("b");

  {  // trim({a, a b a^-1}) == {a, b}
    const auto trimmed = trim(make_reflection_set(
        free2, std::vector<RawReflection>{
                   {GroupWord(free2, false, {}), Letter{a, 1}},
                   {GroupWord(free2, false, {Letter{a, 1}}), Letter{b, 1}}}));
    c.expect(trimmed.members.size() == 2 && trimmed.members[0].element.str() == "a" &&
                 trimmed.members[1].element.str() == "b",
             "trim({a, a b a^-1}) != {a, b}");
  }

  std::mt19937_64 rng(2026);
  std::size_t kernel_runs = 0;
  std::size_t deletion_samples = 0;
  int three_member_budget = 1000;
  int four_member_budget = 1000;
  for (int trial = 0; trial < 1000; ++trial) {
    const int nverts = 2 + static_cast<int>(rng() % 4);  // graphs on <= 5 vertices
    std::vector<std::string> names;
    for (int i = 0; i < nverts; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < nverts; ++i) {
      for (int j = i + 1; j < nverts; ++j) {
        if (rng() % 100 < 35) {
          edges.emplace_back(names[static_cast<std::size_t>(i)],
                             names[static_cast<std::size_t>(j)]);
        }
      }
    }
    const auto g = std::make_shared<const SimplicialGraph>(SimplicialGraph(names, edges));
    std::vector<RawReflection> raw;
    const std::size_t count = 1 + rng() % 4;  // |T| <= 4
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Letter> w;
      const std::size_t len = rng() % 5;  // |w| <= 4
      for (std::size_t j = 0; j < len; ++j) {
        w.push_back(Letter{static_cast<int>(rng() % static_cast<std::uint64_t>(nverts)),
                           rng() % 2 ? 1 : -1});
      }
      raw.emplace_back(GroupWord(g, false, w),
                       Letter{static_cast<int>(rng() % static_cast<std::uint64_t>(nverts)),
                              rng() % 2 ? 1 : -1});
    }
    const auto trimmed = trim(make_reflection_set(g, raw));
    if (!is_trimmed(trimmed)) {
      c.expect(false, "trim output not trimmed (trial " + std::to_string(trial) + ")");
      break;
    }
    bool provenance_ok = true;
    for (std::size_t i = 0; i < trimmed.members.size(); ++i) {
      provenance_ok = provenance_ok && equals(trimmed.eval_over_inputs(trimmed.provenance[i]),
                                              trimmed.members[i].element);
    }
    for (std::size_t i = 0; i < trimmed.inputs.size(); ++i) {
      provenance_ok = provenance_ok &&
                      equals(trimmed.eval_over_members(trimmed.input_expr[i]), trimmed.inputs[i]);
    }
    if (!provenance_ok) {
      c.expect(false, "provenance replay failed (trial " + std::to_string(trial) + ")");
      break;
    }
    std::vector<GroupWord> gens;
    for (const auto& m : trimmed.members) gens.push_back(m.element);
    if (!gens.empty()) {
      const auto rep = deletion_condition_test(gens, 40, 4, rng());
      deletion_samples += rep.samples;
      if (!rep.counterexamples.empty()) {
        c.expect(false, "deletion-condition counterexample (trial " + std::to_string(trial) + ")");
        break;
      }
    }
    // depth-8 kernel panel: every 1-2 member set, a budgeted sample of larger
    bool run_kernel = !trimmed.members.empty() && trimmed.members.size() <= 2;
    if (trimmed.members.size() == 3 && three_member_budget > 0) {
      --three_member_budget;
      run_kernel = true;
    }
    if (trimmed.members.size() == 4 && four_member_budget > 0) {
      --four_member_budget;
      run_kernel = true;
    }
    if (run_kernel) {
      std::vector<RawReflection> again;
      for (const auto& m : trimmed.members) again.emplace_back(m.conjugator, m.axis);
      try {
        (void)reflection_raag_presentation(make_reflection_set(g, again), 8);
        ++kernel_runs;
      } catch (const std::exception& e) {
        c.expect(false, std::string("presentation violation: ") + e.what());
        break;
      }
    }
  }
  c.detail << "    deletion-harness samples: " << deletion_samples
           << ", depth-8 kernel verifications: " << kernel_runs << '\n';

  {  // named presentation fixtures
    const auto p1 = reflection_raag_presentation(
        make_reflection_set(free2, std::vector<RawReflection>{
                                       {GroupWord(free2, false, {}), Letter{a, 1}},
                                       {GroupWord(free2, false, {Letter{b, 1}}), Letter{a, 1}}}),
        8);
    c.expect(p1.delta.vertex_count() == 2 && p1.delta.edge_count() == 0,
             "{a, b a b^-1} should present a rank-2 free group");
    const auto free3 =
        std::make_shared<const SimplicialGraph>(SimplicialGraph({"a", "b", "c"}, {}));
    const auto p2 = reflection_raag_presentation(
        make_reflection_set(free3, std::vector<RawReflection>{
                                       {GroupWord(free3, false, {Letter{free3->index("a"), 1}}),
                                        Letter{free3->index("c"), 1}},
                                       {GroupWord(free3, false, {Letter{free3->index("b"), 1}}),
                                        Letter{free3->index("c"), 1}}}),
        8);
    c.expect(p2.delta.vertex_count() == 2 && p2.delta.edge_count() == 0,
             "{a c a^-1, b c b^-1} should present a rank-2 free group");
  }
}

// ---------------------------------------------------------------- criterion 9

void criterion9(Check& c) {
  std::vector<std::shared_ptr<const ThetaGraph>> fixtures{
      fam(Family::gamma_n, 3),      fam(Family::gamma_n, 4),
      fam(Family::gamma_n, 5),      fam(Family::gamma_n, 6),
      fam(Family::delta_nk, 3, 1),  fam(Family::delta_nk, 3, 2),
      fam(Family::delta_nk, 4, 1),  fam(Family::delta_nk, 4, 2),
      fam(Family::hexagon),         fam(Family::r5_counterexample),
      fam(Family::c4_diagonals),    fam(Family::lambda_path_on_edgeless)};
  Caps caps;
  caps.kernel_depth = 8;
  std::mt19937_64 rng(4096);

  auto same_profile = [](const Verdict& x, const Verdict& y) {
    if (x.answer != y.answer || x.basis.size() != y.basis.size()) return false;
    for (std::size_t i = 0; i < x.basis.size(); ++i) {
      if (x.basis[i].condition != y.basis[i].condition ||
          x.basis[i].passed != y.basis[i].passed) {
        return false;
      }
    }
    if (x.kernel_witness.has_value() != y.kernel_witness.has_value()) return false;
    if (x.index_report.has_value() != y.index_report.has_value()) return false;
    if (x.index_report && x.index_report->index != y.index_report->index) return false;
    return true;
  };

  for (const auto& t : fixtures) {
    const auto base = decide_raag_system(t, caps);
    const auto base_fi = decide_finite_index_raag(t, caps);

    std::vector<std::pair<std::string, std::string>> mapping;
    for (const auto& n : t->gamma().vertex_names()) mapping.emplace_back(n, "w" + n + "m");
    const auto renamed = std::make_shared<const ThetaGraph>(t->renamed(mapping));
    c.expect(same_profile(base, decide_raag_system(renamed, caps)), "renaming changed decide");
    c.expect(same_profile(base_fi, decide_finite_index_raag(renamed, caps)),
             "renaming changed the finite-index verdict");

    std::vector<bool> all(t->lambda_edges().size(), true);
    std::vector<bool> some(t->lambda_edges().size());
    for (std::size_t i = 0; i < some.size(); ++i) some[i] = rng() % 2;
    for (const auto& flip : {all, some}) {
      const auto flipped = std::make_shared<const ThetaGraph>(t->with_flipped_orientations(flip));
      c.expect(same_profile(base, decide_raag_system(flipped, caps)),
               "orientation flip changed decide");
      c.expect(same_profile(base_fi, decide_finite_index_raag(flipped, caps)),
               "orientation flip changed the finite-index verdict");
    }
  }
}

}  // namespace

int main() {
  run(1, "gamma_n: yes, index 4, commuting graph C_2n", criterion1);
  run(2, "delta_nk: yes, index 4", criterion2);
  run(3, "hexagon: R4 fails, depth-8 kernel witness validates", criterion3);
  run(4, "r5 fixture: R1-R4 pass, R5 fails, decide no", criterion4);
  run(5, "completion oracle: 2^k vertices, confluent folds", criterion5);
  run(6, "word engine vs Tits-move oracle, exhaustive to length 6", criterion6);
  run(7, "bipartite parity kernel cross-check", criterion7);
  run(8, "reflections: trim, provenance, deletion, depth-8 kernels", criterion8);
  run(9, "verdicts invariant under renaming and orientation flips", criterion9);
  if (failures == 0) {
    std::puts("acceptance: all criteria PASS");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
