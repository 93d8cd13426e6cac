#pragma once

#include <json.hpp>

#include "vraag/completion.hpp"
#include "vraag/conditions.hpp"
#include "vraag/decision.hpp"
#include "vraag/reflections.hpp"

namespace vraag {

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const ConditionReport& rep);
nlohmann::json to_json(const IndexReport& rep);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const Caps& caps);
nlohmann::json to_json(const CommutingGraph& delta);
nlohmann::json to_json(const ReflectionPresentation& pres);

std::string render_text(const Verdict& verdict);

}  // namespace vraag
