#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vraag/caps.hpp"
#include "vraag/conditions.hpp"
#include "vraag/lambda.hpp"
#include "vraag/theta.hpp"
#include "vraag/word.hpp"

namespace vraag {

enum class Answer { Yes, No, Unknown };

const char* answer_name(Answer a);

struct IndexReport {
  std::size_t expected_index = 0;    // 2^k, doubled once per cone vertex
  std::size_t omega_vertices = 0;    // vertex count of the completion used
  bool full_valence = false;
  std::optional<std::size_t> index;  // omega-derived index (scaled past cones)
  std::size_t cone_vertices = 0;
  bool virtually_free = false;
  bool virtually_free_caveat = false;  // set when the forest test was not applicable
  bool omega_saturated = false;
};

struct Verdict {
  Answer answer = Answer::Unknown;
  std::vector<ConditionReport> basis;
  std::optional<Witness> condition_witness;   // witness of the first failing condition
  std::optional<LambdaWord> kernel_witness;   // nontrivial Delta word mapping to 1
  std::optional<IndexReport> index_report;
  std::vector<std::string> notes;
};

// RAAG-system decision. Two or fewer lambda components decide via R1-R4;
// three or more can only refute (R1-R5, triangle configuration on
// triangle-free gamma) or stay Unknown.
Verdict decide_raag_system(std::shared_ptr<const ThetaGraph> theta, const Caps& caps = {});

// Finite-index RAAG-system decision for triangle-free gamma; on Yes the
// completion complex supplies the index and must agree with 2^k.
Verdict decide_finite_index_raag(std::shared_ptr<const ThetaGraph> theta, const Caps& caps = {});

// Breadth-first search (by length, then lexicographically) over canonical
// words of the RAAG on `delta` for a nontrivial word whose image under the
// assignment is trivial. Deterministic.
std::optional<std::vector<Letter>> kernel_search(const SimplicialGraph& delta,
                                                 const std::vector<GroupWord>& assignment,
                                                 std::size_t max_len);

// The per-Delta-vertex assignment of lambda-edge elements.
std::vector<GroupWord> lambda_assignment(const ThetaGraph& theta);

struct DeletionReport {
  std::size_t samples = 0;
  std::size_t non_geodesic = 0;
  std::vector<std::vector<Letter>> counterexamples;  // S-words; gen indexes the generator list
};

// Falsification harness for the deletion condition over a generating set:
// sampled S-words that admit a shorter equal S-expression must also admit a
// two-letter deletion.
DeletionReport deletion_condition_test(const std::vector<GroupWord>& generators,
                                       std::size_t samples, std::size_t max_word_len,
                                       std::uint64_t seed);

struct VirtuallyFreeReport {
  bool virtually_free = false;
  bool caveat = false;
};

VirtuallyFreeReport virtually_free_report(const SimplicialGraph& gamma);

}  // namespace vraag
