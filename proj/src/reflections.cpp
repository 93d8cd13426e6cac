#include "vraag/reflections.hpp"

#include <algorithm>

#include "vraag/decision.hpp"
#include "vraag/errors.hpp"

namespace vraag {

namespace {

GroupWord single_letter(const std::shared_ptr<const SimplicialGraph>& ambient, Letter l) {
  return GroupWord(ambient, false, {l});
}

std::vector<Letter> inverse_word(const std::vector<Letter>& w) {
  std::vector<Letter> out(w.rbegin(), w.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

}  // namespace

Reflection normalize_reflection(const GroupWord& w, Letter axis) {
  if (w.involutive()) fail(errc::bad_params, "reflections live in a RAAG");
  const SimplicialGraph& g = w.ambient();
  std::vector<Letter> u = reduce(w).letters();
  // Drop conjugator letters that slide to the end and cancel into the axis:
  // letters with the axis generator, or commuting with it.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = u.size(); i-- > 0;) {
      bool movable = true;
      for (std::size_t k = i + 1; k < u.size() && movable; ++k) {
        movable = wordops::letters_commute(g, u[i], u[k]);
      }
      if (!movable) continue;
      if (u[i].gen == axis.gen || g.adjacent(u[i].gen, axis.gen)) {
        u.erase(u.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
    if (changed) {
      wordops::cancel_to_geodesic(g, false, u);
    }
  }
  wordops::lex_least_shuffle(g, u);
  Reflection r{GroupWord(w.ambient_ptr(), false, u), axis, {}};
  r.element = reduce(r.conjugator * single_letter(w.ambient_ptr(), axis) *
                     r.conjugator.inverse());
  if (r.element.size() != 2 * r.conjugator.size() + 1) {
    fail(errc::internal, "reflection normalization left a reducible sandwich");
  }
  return r;
}

GroupWord ReflectionSet::eval_over_inputs(const std::vector<Letter>& word) const {
  GroupWord acc(ambient, false, {});
  for (const Letter& l : word) {
    const GroupWord& base = inputs[static_cast<std::size_t>(l.gen)];
    acc = acc * (l.sign > 0 ? base : base.inverse());
  }
  return reduce(acc);
}

GroupWord ReflectionSet::eval_over_members(const std::vector<Letter>& word) const {
  GroupWord acc(ambient, false, {});
  for (const Letter& l : word) {
    const GroupWord& base = members[static_cast<std::size_t>(l.gen)].element;
    acc = acc * (l.sign > 0 ? base : base.inverse());
  }
  return reduce(acc);
}

ReflectionSet make_reflection_set(std::shared_ptr<const SimplicialGraph> ambient,
                                  const std::vector<std::pair<GroupWord, Letter>>& raw) {
  ReflectionSet set;
  set.ambient = std::move(ambient);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Reflection r = normalize_reflection(raw[i].first, raw[i].second);
    set.inputs.push_back(r.element);
    set.input_expr.push_back({Letter{static_cast<int>(i), 1}});
    set.provenance.push_back({Letter{static_cast<int>(i), 1}});
    set.members.push_back(std::move(r));
  }
  return set;
}

namespace {

// |reduce(u^-1 v)| == |v| - |u| characterizes "some reduced expression of v
// begins with u" under Tits rewriting.
bool is_prefix(const GroupWord& u, const GroupWord& v) {
  const GroupWord ru = reduce(u);
  const GroupWord rv = reduce(v);
  if (ru.size() > rv.size()) return false;
  return reduce(ru.inverse() * rv).size() == rv.size() - ru.size();
}

bool find_violation(const ReflectionSet& set, TrimViolation* out) {
  const auto& ms = set.members;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (i == j) continue;
      if (ms[i].element == ms[j].element) {
        if (out) *out = TrimViolation{"duplicate", std::min(i, j), std::max(i, j), 1};
        return true;
      }
      if (equals(ms[i].element, ms[j].element.inverse())) {
        if (out) *out = TrimViolation{"inverse_pair", std::min(i, j), std::max(i, j), 1};
        return true;
      }
    }
  }
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (i == j) continue;
      const auto ambient = set.ambient;
      for (int sign : {+1, -1}) {
        const GroupWord u =
            ms[i].conjugator * GroupWord(ambient, false, {Letter{ms[i].axis.gen,
                                                                 sign * ms[i].axis.sign}});
        if (is_prefix(u, ms[j].conjugator)) {
          if (out) *out = TrimViolation{"prefix", i, j, sign};
          return true;
        }
      }
    }
  }
  return false;
}

void drop_member(ReflectionSet& set, std::size_t j, std::size_t replacement, int sign_flip) {
  // Rewrite input expressions: letter j becomes (replacement, flipped sign),
  // higher indices shift down.
  for (auto& expr : set.input_expr) {
    for (auto& l : expr) {
      if (l.gen == static_cast<int>(j)) {
        l.gen = static_cast<int>(replacement);
        l.sign *= sign_flip;
      }
      if (l.gen > static_cast<int>(j)) --l.gen;
    }
  }
  set.members.erase(set.members.begin() + static_cast<std::ptrdiff_t>(j));
  set.provenance.erase(set.provenance.begin() + static_cast<std::ptrdiff_t>(j));
}

}  // namespace

bool is_trimmed(const ReflectionSet& set, TrimViolation* violation) {
  return !find_violation(set, violation);
}

ReflectionSet trim(ReflectionSet set) {
  constexpr int kIterationCap = 100000;
  for (int iter = 0; iter < kIterationCap; ++iter) {
    TrimViolation v;
    if (!find_violation(set, &v)) return set;
    if (v.kind == "duplicate") {
      drop_member(set, v.j, v.i, +1);
      continue;
    }
    if (v.kind == "inverse_pair") {
      drop_member(set, v.j, v.i, -1);
      continue;
    }
    // prefix violation: conjugate member j so its conjugator gets shorter.
    const Reflection& ri = set.members[v.i];
    Reflection& rj = set.members[v.j];
    const std::size_t before = rj.conjugator.size();
    // u = w_i s_i^sign prefixes w_j; conjugating by r_i^sign strips it.
    const GroupWord riw = v.axis_sign > 0 ? ri.element : ri.element.inverse();
    const GroupWord new_conj = riw.inverse() * rj.conjugator;
    Reflection replaced = normalize_reflection(new_conj, rj.axis);
    if (replaced.conjugator.size() >= before) {
      fail(errc::internal, "trim replacement failed to shorten the conjugator");
    }
    // provenance: r_j <- r_i^-sign r_j r_i^sign over the original inputs
    const auto& pi = set.provenance[v.i];
    const auto pi_inv = inverse_word(pi);
    std::vector<Letter> new_prov;
    const auto& left = v.axis_sign > 0 ? pi_inv : pi;
    const auto& right = v.axis_sign > 0 ? pi : pi_inv;
    new_prov.insert(new_prov.end(), left.begin(), left.end());
    new_prov.insert(new_prov.end(), set.provenance[v.j].begin(), set.provenance[v.j].end());
    new_prov.insert(new_prov.end(), right.begin(), right.end());
    set.provenance[v.j] = std::move(new_prov);
    // input expressions: old r_j = r_i^sign r_j_new r_i^-sign
    for (auto& expr : set.input_expr) {
      std::vector<Letter> rewritten;
      for (const Letter& l : expr) {
        if (l.gen == static_cast<int>(v.j)) {
          rewritten.push_back(Letter{static_cast<int>(v.i), v.axis_sign});
          rewritten.push_back(l);
          rewritten.push_back(Letter{static_cast<int>(v.i), -v.axis_sign});
        } else {
          rewritten.push_back(l);
        }
      }
      expr = std::move(rewritten);
    }
    set.members[v.j] = std::move(replaced);
  }
  fail(errc::internal, "trim did not terminate");
}

ReflectionPresentation reflection_raag_presentation(const ReflectionSet& set,
                                                    std::size_t kernel_depth) {
  ReflectionPresentation pres;
  pres.trimmed = trim(set);
  const auto& ms = pres.trimmed.members;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::string n = std::to_string(i + 1);
    while (n.size() < 3) n = "0" + n;
    names.push_back("r" + n);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (commutes(ms[i].element, ms[j].element)) {
        edges.emplace_back(names[i], names[j]);
      }
    }
  }
  pres.delta = SimplicialGraph(names, edges);
  pres.names = names;
  std::vector<GroupWord> assignment;
  for (const auto& m : ms) assignment.push_back(m.element);
  if (!ms.empty()) {
    const auto witness = kernel_search(pres.delta, assignment, kernel_depth);
    if (witness) {
      fail(errc::internal, "trimmed reflection set admits a kernel word (bug)");
    }
  }
  pres.verified_to_depth = kernel_depth;
  return pres;
}

}  // namespace vraag
