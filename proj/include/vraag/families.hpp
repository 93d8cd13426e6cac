#pragma once

#include <optional>
#include <string>

#include "vraag/theta.hpp"

namespace vraag {

enum class Family {
  gamma_n,
  delta_nk,
  hexagon,
  r5_counterexample,
  c4_diagonals,
  lambda_path_on_edgeless,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct FamilySpec {
  Family name = Family::hexagon;
  int n = 0;  // gamma_n, delta_nk: n >= 3
  int k = 0;  // delta_nk: k >= 1
};

ThetaGraph make_family(const FamilySpec& spec);

}  // namespace vraag
