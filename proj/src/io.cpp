#include "vraag/io.hpp"

#include <fstream>
#include <sstream>

#include "vraag/errors.hpp"

namespace vraag {

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::pair<std::string, std::string> split_edge(const std::string& tok) {
  const auto dash = tok.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size()) {
    fail(errc::parse_error, "malformed edge '" + tok + "'");
  }
  return {tok.substr(0, dash), tok.substr(dash + 1)};
}

struct RawTheta {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> gamma;
  std::vector<std::pair<std::string, std::string>> lambda;
};

RawTheta read_directives(std::istream& in, bool allow_lambda) {
  RawTheta raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(strip_comment(line));
    std::string head;
    if (!(ls >> head)) continue;
    std::string tok;
    if (head == "vertices:") {
      while (ls >> tok) raw.vertices.push_back(tok);
    } else if (head == "gamma:" || head == "edges:") {
      while (ls >> tok) raw.gamma.push_back(split_edge(tok));
    } else if (head == "lambda:" && allow_lambda) {
      while (ls >> tok) raw.lambda.push_back(split_edge(tok));
    } else {
      fail(errc::parse_error,
           "line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
    }
  }
  return raw;
}

}  // namespace

ThetaGraph parse_theta(std::istream& in) {
  RawTheta raw = read_directives(in, true);
  return ThetaGraph(SimplicialGraph(raw.vertices, raw.gamma), raw.lambda);
}

ThetaGraph parse_theta_string(const std::string& text) {
  std::istringstream in(text);
  return parse_theta(in);
}

ThetaGraph parse_theta_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return parse_theta(in);
}

std::string write_theta(const ThetaGraph& theta) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& n : theta.gamma().vertex_names()) out << ' ' << n;
  out << '\n';
  out << "gamma:";
  for (const auto& [u, v] : theta.gamma().edges()) {
    out << ' ' << theta.gamma().name(u) << '-' << theta.gamma().name(v);
  }
  out << '\n';
  out << "lambda:";
  for (const auto& [u, v] : theta.lambda().edges()) {
    out << ' ' << theta.gamma().name(u) << '-' << theta.gamma().name(v);
  }
  out << '\n';
  return out.str();
}

SimplicialGraph parse_graph(std::istream& in) {
  RawTheta raw = read_directives(in, false);
  for (const auto& n : raw.vertices) check_vertex_name(n);
  return SimplicialGraph(raw.vertices, raw.gamma);
}

SimplicialGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return parse_graph(in);
}

std::vector<ReflectionInput> parse_reflections(std::istream& in,
                                               std::shared_ptr<const SimplicialGraph> ambient) {
  std::vector<ReflectionInput> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip_comment(line);
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto semi = body.find(';');
    if (semi == std::string::npos) {
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected 'w: ... ; s: ...'");
    }
    auto expect_prefix = [&](std::string part, const std::string& tag) {
      const auto start = part.find_first_not_of(" \t");
      if (start == std::string::npos || part.substr(start, tag.size()) != tag) {
        fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected '" + tag + "'");
      }
      return part.substr(start + tag.size());
    };
    const std::string wpart = expect_prefix(body.substr(0, semi), "w:");
    const std::string spart = expect_prefix(body.substr(semi + 1), "s:");
    GroupWord w = GroupWord::parse(ambient, false, wpart);
    GroupWord s = GroupWord::parse(ambient, false, spart);
    if (s.size() != 1) {
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": 's:' wants a single letter");
    }
    out.push_back(ReflectionInput{std::move(w), s.letters()[0]});
  }
  return out;
}

std::vector<ReflectionInput> parse_reflections_file(
    const std::string& path, std::shared_ptr<const SimplicialGraph> ambient) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return parse_reflections(in, ambient);
}

}  // namespace vraag
