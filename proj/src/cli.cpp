#include "vraag/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <iostream>
#include <memory>
#include <sstream>

#include "vraag/completion.hpp"
#include "vraag/errors.hpp"
#include "vraag/families.hpp"
#include "vraag/io.hpp"
#include "vraag/json_io.hpp"
#include "vraag/reflections.hpp"

namespace vraag {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 3;
constexpr int kExitCapExceeded = 4;

Caps caps_from_env() {
  Caps caps;
  const char* env = std::getenv("VISUAL_RAAG_CAPS");
  if (!env) return caps;
  std::istringstream in(env);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(errc::usage_error, "VISUAL_RAAG_CAPS wants key=value");
    const std::string key = item.substr(0, eq);
    const std::size_t value = static_cast<std::size_t>(std::stoull(item.substr(eq + 1)));
    if (value == 0) fail(errc::usage_error, "caps must be positive");
    if (key == "cycle_max_len") {
      caps.cycle_max_len = value;
    } else if (key == "cycle_max_count") {
      caps.cycle_max_count = value;
    } else if (key == "kernel_depth") {
      caps.kernel_depth = value;
    } else if (key == "cell_cap") {
      caps.cell_cap = value;
    } else {
      fail(errc::usage_error, "unknown cap '" + key + "'");
    }
  }
  return caps;
}

struct Output {
  std::string path;  // empty = stdout
  std::string format = "json";

  void emit(const nlohmann::json& j, const std::string& text) const {
    std::string payload = format == "json" ? j.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(path);
      if (!out) fail(errc::usage_error, "cannot write '" + path + "'");
      out << payload;
    }
  }
};

nlohmann::json report_shell(const std::string& command, const Caps& caps) {
  nlohmann::json j;
  j["schema"] = 1;
  j["command"] = command;
  j["caps"] = to_json(caps);
  return j;
}

int exit_code_for(const Verdict& v) {
  if (v.index_report && !v.index_report->omega_saturated) return kExitCapExceeded;
  switch (v.answer) {
    case Answer::Yes: return kExitYes;
    case Answer::No: return kExitNo;
    case Answer::Unknown: break;
  }
  for (const auto& rep : v.basis) {
    if (rep.truncated) return kExitCapExceeded;
  }
  return kExitUnknown;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"visual RAAG subgroup checker"};
  app.require_subcommand(1);

  Caps caps;
  try {
    caps = caps_from_env();
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "bad VISUAL_RAAG_CAPS: " << e.what() << '\n';
    return kExitInputError;
  }

  std::string input, output, format = "json", graph_path, conditions_arg;
  auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
    if (needs_input) cmd->add_option("--input,-i", input, "theta file")->required();
    cmd->add_option("--output,-o", output, "report path (default stdout)");
    cmd->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--cycle-max-len", caps.cycle_max_len, "cycle length cap (vertices)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cycle-max-count", caps.cycle_max_count, "cycle count cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--kernel-depth", caps.kernel_depth, "kernel search depth")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cell-cap", caps.cell_cap, "completion cell cap")
        ->check(CLI::PositiveNumber);
  };

  auto* check_cmd = app.add_subcommand("check", "run condition checks");
  add_common(check_cmd);
  check_cmd->add_option("--conditions", conditions_arg, "comma list, e.g. R1,R4");

  auto* decide_cmd = app.add_subcommand("decide", "RAAG-system decision");
  add_common(decide_cmd);

  auto* index_cmd = app.add_subcommand("index", "finite-index RAAG decision");
  add_common(index_cmd);

  auto* delta_cmd = app.add_subcommand("commuting-graph", "emit the commuting graph");
  add_common(delta_cmd);

  auto* kernel_cmd = app.add_subcommand("kernel-search", "search for a kernel word");
  add_common(kernel_cmd);
  std::size_t depth_flag = 0;
  kernel_cmd->add_option("--depth", depth_flag, "kernel search depth")->check(CLI::PositiveNumber);

  auto* refl_cmd = app.add_subcommand("reflections", "trim a reflection set");
  refl_cmd->add_option("--graph", graph_path, "ambient RAAG graph file")->required();
  refl_cmd->add_option("--input,-i", input, "reflections file")->required();
  refl_cmd->add_option("--output,-o", output, "report path (default stdout)");
  refl_cmd->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  refl_cmd->add_option("--kernel-depth", caps.kernel_depth, "verification depth")
      ->check(CLI::PositiveNumber);

  auto* fam_cmd = app.add_subcommand("families", "emit a named fixture");
  std::string fam_action, fam_name_arg;
  int fam_n = 3, fam_k = 1;
  fam_cmd->add_option("action", fam_action, "emit")->required();
  fam_cmd->add_option("name", fam_name_arg, "family name")->required();
  fam_cmd->add_option("--n", fam_n, "n parameter");
  fam_cmd->add_option("--k", fam_k, "k parameter");
  fam_cmd->add_option("--output,-o", output, "theta file path (default stdout)");

  auto* omega_cmd = app.add_subcommand("omega-export", "build and export the completion");
  add_common(omega_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return kExitYes;
    }
    std::cerr << e.what() << '\n';
    return kExitInputError;
  }
  if (depth_flag > 0) caps.kernel_depth = depth_flag;

  Output out{output, format};
  try {
    if (app.got_subcommand(check_cmd)) {
      const auto theta = std::make_shared<const ThetaGraph>(parse_theta_file(input));
      std::vector<ConditionId> wanted;
      if (conditions_arg.empty()) {
        wanted = {ConditionId::R1, ConditionId::R2};
        if (check_R1(*theta).passed) {
          wanted.push_back(ConditionId::R3);
          wanted.push_back(ConditionId::R4);
          if (theta->component_count() >= 3) {
            wanted.push_back(ConditionId::R5);
            wanted.push_back(ConditionId::TriangleConfig);
          }
        }
        wanted.push_back(ConditionId::F1);
        wanted.push_back(ConditionId::F2);
      } else {
        std::istringstream in(conditions_arg);
        std::string name;
        while (std::getline(in, name, ',')) {
          const auto id = condition_from_name(name);
          if (!id) fail(errc::usage_error, "unknown condition '" + name + "'");
          wanted.push_back(*id);
        }
      }
      nlohmann::json j = report_shell("check", caps);
      nlohmann::json conds = nlohmann::json::array();
      std::ostringstream text;
      bool any_fail = false, any_trunc = false;
      for (ConditionId id : wanted) {
        const auto rep = run_condition(id, *theta, caps);
        conds.push_back(to_json(rep));
        any_fail = any_fail || !rep.passed;
        any_trunc = any_trunc || rep.truncated;
        text << condition_name(id) << ": " << (rep.passed ? "pass" : "fail")
             << (rep.truncated ? " (truncated)" : "") << '\n';
      }
      j["conditions"] = conds;
      out.emit(j, text.str());
      return any_fail ? kExitNo : (any_trunc ? kExitCapExceeded : kExitYes);
    }

    if (app.got_subcommand(decide_cmd)) {
      const auto theta = std::make_shared<const ThetaGraph>(parse_theta_file(input));
      const Verdict v = decide_raag_system(theta, caps);
      nlohmann::json j = report_shell("decide", caps);
      j.update(to_json(v));
      out.emit(j, render_text(v));
      return exit_code_for(v);
    }

    if (app.got_subcommand(index_cmd)) {
      const auto theta = std::make_shared<const ThetaGraph>(parse_theta_file(input));
      const Verdict v = decide_finite_index_raag(theta, caps);
      nlohmann::json j = report_shell("index", caps);
      j.update(to_json(v));
      out.emit(j, render_text(v));
      return exit_code_for(v);
    }

    if (app.got_subcommand(delta_cmd)) {
      const auto theta = std::make_shared<const ThetaGraph>(parse_theta_file(input));
      const auto delta = commuting_graph(*theta);
      nlohmann::json j = report_shell("commuting-graph", caps);
      j.update(to_json(delta));
      std::ostringstream text;
      text << "vertices:";
      for (const auto& n : delta.graph.vertex_names()) text << ' ' << n;
      text << "\nedges:";
      for (const auto& [u, v] : delta.graph.edges()) {
        text << ' ' << delta.graph.name(u) << '|' << delta.graph.name(v);
      }
      text << '\n';
      out.emit(j, text.str());
      return kExitYes;
    }

    if (app.got_subcommand(kernel_cmd)) {
      const auto theta = std::make_shared<const ThetaGraph>(parse_theta_file(input));
      const auto delta = commuting_graph(*theta);
      const auto assignment = lambda_assignment(*theta);
      std::optional<std::vector<Letter>> found;
      if (!assignment.empty()) found = kernel_search(delta.graph, assignment, caps.kernel_depth);
      nlohmann::json j = report_shell("kernel-search", caps);
      j["depth"] = caps.kernel_depth;
      std::ostringstream text;
      if (found) {
        std::map<std::pair<int, int>, int> edge_index;
        for (std::size_t e = 0; e < theta->lambda_edges().size(); ++e) {
          edge_index[theta->lambda_edges()[e]] = static_cast<int>(e);
        }
        std::vector<LambdaLetter> ls;
        for (const Letter& l : *found) {
          ls.push_back(LambdaLetter{
              edge_index.at(delta.endpoint_of[static_cast<std::size_t>(l.gen)]), l.sign});
        }
        const LambdaWord w(theta, ls);
        j["witness"] = w.str();
        text << "kernel witness: " << w.str() << '\n';
      } else {
        j["witness"] = nullptr;
        text << "no kernel word up to depth " << caps.kernel_depth << '\n';
      }
      out.emit(j, text.str());
      return found ? kExitNo : kExitYes;
    }

    if (app.got_subcommand(refl_cmd)) {
      const auto ambient = std::make_shared<const SimplicialGraph>(parse_graph_file(graph_path));
      const auto raw = parse_reflections_file(input, ambient);
      std::vector<std::pair<GroupWord, Letter>> pairs;
      for (const auto& r : raw) pairs.emplace_back(r.conjugator, r.axis);
      const auto pres = reflection_raag_presentation(make_reflection_set(ambient, pairs),
                                                     caps.kernel_depth);
      nlohmann::json j = report_shell("reflections", caps);
      j.update(to_json(pres));
      std::ostringstream text;
      for (std::size_t i = 0; i < pres.trimmed.members.size(); ++i) {
        text << pres.names[i] << ": " << pres.trimmed.members[i].element.str() << '\n';
      }
      text << "delta edges:";
      for (const auto& [u, v] : pres.delta.edges()) {
        text << ' ' << pres.delta.name(u) << '|' << pres.delta.name(v);
      }
      text << "\nverified to depth " << pres.verified_to_depth << '\n';
      out.emit(j, text.str());
      return kExitYes;
    }

    if (app.got_subcommand(fam_cmd)) {
      if (fam_action != "emit") fail(errc::usage_error, "only 'families emit <name>' is supported");
      const auto fam = family_from_name(fam_name_arg);
      if (!fam) fail(errc::usage_error, "unknown family '" + fam_name_arg + "'");
      const ThetaGraph theta = make_family(FamilySpec{*fam, fam_n, fam_k});
      const std::string text = write_theta(theta);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(output);
        if (!f) fail(errc::usage_error, "cannot write '" + output + "'");
        f << text;
      }
      return kExitYes;
    }

    if (app.got_subcommand(omega_cmd)) {
      const auto theta = std::make_shared<const ThetaGraph>(parse_theta_file(input));
      const auto completion = build_completion(*theta, caps.cell_cap);
      const std::string text = completion.export_listing(theta->gamma());
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(output);
        if (!f) fail(errc::usage_error, "cannot write '" + output + "'");
        f << text;
      }
      return completion.saturated ? kExitYes : kExitCapExceeded;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace vraag
