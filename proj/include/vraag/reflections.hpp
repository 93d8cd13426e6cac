#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vraag/graph.hpp"
#include "vraag/word.hpp"

namespace vraag {

// A conjugate w s w^-1 of a signed generator in a RAAG, stored with the
// shortest conjugator for which the sandwich is reduced.
struct Reflection {
  GroupWord conjugator;
  Letter axis;
  GroupWord element;  // canonical form of w s w^-1
};

Reflection normalize_reflection(const GroupWord& w, Letter axis);

// Reflection generating set with two-way provenance: each member carries an
// expression over the original inputs, and each original input carries an
// expression over the current members.
struct ReflectionSet {
  std::shared_ptr<const SimplicialGraph> ambient;
  std::vector<Reflection> members;
  std::vector<std::vector<Letter>> provenance;  // member -> word over input indices
  std::vector<GroupWord> inputs;                // original (normalized) elements
  std::vector<std::vector<Letter>> input_expr;  // input -> word over member indices

  GroupWord eval_over_inputs(const std::vector<Letter>& word) const;
  GroupWord eval_over_members(const std::vector<Letter>& word) const;
};

ReflectionSet make_reflection_set(std::shared_ptr<const SimplicialGraph> ambient,
                                  const std::vector<std::pair<GroupWord, Letter>>& raw);

struct TrimViolation {
  std::string kind;  // "duplicate", "inverse_pair", "prefix"
  std::size_t i = 0;
  std::size_t j = 0;
  int axis_sign = 1;  // for "prefix": whether w*s (+1) or w*s^-1 (-1) prefixes w_j
};

bool is_trimmed(const ReflectionSet& set, TrimViolation* violation = nullptr);

// Duplicate/inverse dropping plus prefix-violation conjugations, iterated to
// a trimmed set; preserves the generated subgroup and both provenances.
ReflectionSet trim(ReflectionSet set);

struct ReflectionPresentation {
  SimplicialGraph delta;               // commuting graph of the trimmed set
  std::vector<std::string> names;      // delta vertex name of member i
  ReflectionSet trimmed;
  std::size_t verified_to_depth = 0;   // kernel search found nothing up to here
};

ReflectionPresentation reflection_raag_presentation(const ReflectionSet& set,
                                                    std::size_t kernel_depth = 8);

}  // namespace vraag
