#include "vraag/json_io.hpp"

#include <sstream>

namespace vraag {

using nlohmann::json;

json to_json(const Witness& w) {
  json j;
  j["kind"] = w.kind;
  if (!w.cycle.empty()) j["cycle"] = w.cycle;
  if (!w.square.empty()) j["square"] = w.square;
  if (!w.pair.empty()) j["pair"] = w.pair;
  if (!w.context.empty()) j["context"] = w.context;
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

json to_json(const ConditionReport& rep) {
  json j;
  j["name"] = condition_name(rep.condition);
  j["passed"] = rep.passed;
  j["truncated"] = rep.truncated;
  if (rep.witness) j["witness"] = to_json(*rep.witness);
  return j;
}

json to_json(const IndexReport& rep) {
  json j;
  j["expected_index"] = rep.expected_index;
  j["omega_vertices"] = rep.omega_vertices;
  j["full_valence"] = rep.full_valence;
  if (rep.index) {
    j["index"] = *rep.index;
  } else {
    j["index"] = nullptr;
  }
  j["cone_vertices"] = rep.cone_vertices;
  j["virtually_free"] = rep.virtually_free;
  j["virtually_free_caveat"] = rep.virtually_free_caveat;
  j["omega_saturated"] = rep.omega_saturated;
  return j;
}

json to_json(const Verdict& verdict) {
  json j;
  j["answer"] = answer_name(verdict.answer);
  json conds = json::array();
  for (const auto& rep : verdict.basis) conds.push_back(to_json(rep));
  j["conditions"] = conds;
  json cert;
  if (verdict.condition_witness) cert["failed_condition_witness"] = to_json(*verdict.condition_witness);
  if (verdict.kernel_witness) cert["kernel_witness"] = verdict.kernel_witness->str();
  if (verdict.index_report) cert["index_report"] = to_json(*verdict.index_report);
  if (!cert.is_null()) j["certificate"] = cert;
  if (verdict.index_report) j["index_report"] = to_json(*verdict.index_report);
  j["notes"] = verdict.notes;
  return j;
}

json to_json(const Caps& caps) {
  json j;
  j["cycle_max_len"] = caps.cycle_max_len;
  j["cycle_max_count"] = caps.cycle_max_count;
  j["kernel_depth"] = caps.kernel_depth;
  j["cell_cap"] = caps.cell_cap;
  return j;
}

json to_json(const CommutingGraph& delta) {
  json j;
  j["vertices"] = delta.graph.vertex_names();
  json edges = json::array();
  for (const auto& [u, v] : delta.graph.edges()) {
    edges.push_back(json::array({delta.graph.name(u), delta.graph.name(v)}));
  }
  j["edges"] = edges;
  return j;
}

json to_json(const ReflectionPresentation& pres) {
  json j;
  j["delta_vertices"] = pres.delta.vertex_names();
  json edges = json::array();
  for (const auto& [u, v] : pres.delta.edges()) {
    edges.push_back(json::array({pres.delta.name(u), pres.delta.name(v)}));
  }
  j["delta_edges"] = edges;
  json members = json::array();
  for (std::size_t i = 0; i < pres.trimmed.members.size(); ++i) {
    const auto& m = pres.trimmed.members[i];
    json mj;
    mj["name"] = pres.names[i];
    mj["conjugator"] = m.conjugator.str();
    std::string axis = m.conjugator.ambient().name(m.axis.gen);
    if (m.axis.sign < 0) axis += "^-1";
    mj["axis"] = axis;
    mj["element"] = m.element.str();
    members.push_back(mj);
  }
  j["trimmed"] = members;
  j["verified_to_depth"] = pres.verified_to_depth;
  return j;
}

std::string render_text(const Verdict& verdict) {
  std::ostringstream os;
  os << "answer: " << answer_name(verdict.answer) << '\n';
  for (const auto& rep : verdict.basis) {
    os << "  " << condition_name(rep.condition) << ": " << (rep.passed ? "pass" : "fail");
    if (rep.truncated) os << " (truncated)";
    if (rep.witness) {
      os << "  [" << rep.witness->kind;
      auto show = [&](const char* tag, const std::vector<std::string>& vs) {
        if (vs.empty()) return;
        os << ' ' << tag << '=';
        for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
      };
      show("cycle", rep.witness->cycle);
      show("square", rep.witness->square);
      show("pair", rep.witness->pair);
      os << ']';
    }
    os << '\n';
  }
  if (verdict.kernel_witness) os << "kernel witness: " << verdict.kernel_witness->str() << '\n';
  if (verdict.index_report) {
    const auto& ir = *verdict.index_report;
    os << "index: ";
    if (ir.index) {
      os << *ir.index;
    } else {
      os << "none";
    }
    os << " (expected " << ir.expected_index << ", omega vertices " << ir.omega_vertices
       << (ir.full_valence ? ", full valence" : ", not full valence") << ")\n";
    os << "virtually free: " << (ir.virtually_free ? "yes" : "no")
       << (ir.virtually_free_caveat ? " (chordality caveat)" : "") << '\n';
  }
  for (const auto& n : verdict.notes) os << "note: " << n << '\n';
  return os.str();
}

}  // namespace vraag
