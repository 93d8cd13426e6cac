#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vraag/caps.hpp"
#include "vraag/theta.hpp"

namespace vraag {

enum class ConditionId { R1, R2, R3, R4, R5, F1, F2, TriangleConfig };

const char* condition_name(ConditionId id);
std::optional<ConditionId> condition_from_name(const std::string& name);

struct Witness {
  std::string kind;
  std::vector<std::string> cycle;    // lambda cycle or 2-component cycle
  std::vector<std::string> square;   // 4 vertices of a 2-component square
  std::vector<std::string> pair;     // offending vertex pair / path endpoints
  std::vector<std::string> context;  // extra vertices (hull members, configuration)
  std::string detail;
};

struct ConditionReport {
  ConditionId condition = ConditionId::R1;
  bool passed = false;
  bool truncated = false;
  std::optional<Witness> witness;
};

// R1: lambda contains no cycle.
ConditionReport check_R1(const ThetaGraph& theta);
// R2: each lambda component is an induced subgraph of the overlay.
ConditionReport check_R2(const ThetaGraph& theta);
// R3: every 2-component square spans the join of the two hulls. Needs R1.
ConditionReport check_R3(const ThetaGraph& theta);
// R4: every edge of every 2-component cycle lies in a square with two
// vertices in each hull. Needs R1; enumeration is capped.
ConditionReport check_R4(const ThetaGraph& theta, const Caps& caps = {});
// R5: the three-component join condition. Needs R1; vacuous below 3
// components.
ConditionReport check_R5(const ThetaGraph& theta);
// Square-plus-two-paths configuration; passed means "no configuration
// present". Needs R1; vacuous below 3 components.
ConditionReport check_triangle_config(const ThetaGraph& theta);
// F1: every non-cone vertex lies on a lambda edge.
ConditionReport check_F1(const ThetaGraph& theta);
// F2: every cross-component vertex pair is joined by an alternating path.
ConditionReport check_F2(const ThetaGraph& theta);

ConditionReport run_condition(ConditionId id, const ThetaGraph& theta, const Caps& caps = {});

}  // namespace vraag
