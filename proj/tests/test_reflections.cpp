#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "vraag/decision.hpp"
#include "vraag/errors.hpp"
#include "vraag/io.hpp"
#include "vraag/reflections.hpp"

using namespace vraag;
using namespace vraag::testing;

TEST_SUITE_BEGIN("reflections");

namespace {

Letter letter(const SimplicialGraph& g, const std::string& name, int sign = 1) {
  return Letter{g.index(name), sign};
}

}  // namespace

TEST_CASE("normalize_reflection") {
  const auto free3 = share(graph({"a", "b", "c"}));
  SUBCASE("free reduction of the conjugator") {
    const auto r = normalize_reflection(raag_word(free3, "a b^-1 b"), letter(*free3, "c"));
    CHECK(r.conjugator.str() == "a");
    CHECK(r.element.str() == "a c a^-1");
  }
  SUBCASE("empty conjugator") {
    const auto r = normalize_reflection(raag_word(free3, ""), letter(*free3, "a"));
    CHECK(r.conjugator.empty());
    CHECK(r.element.str() == "a");
  }
  SUBCASE("commuting conjugator letters collapse") {
    const auto z2 = share(graph({"a", "b"}, {{"a", "b"}}));
    const auto r = normalize_reflection(raag_word(z2, "b"), letter(*z2, "a"));
    CHECK(r.conjugator.empty());
    CHECK(r.element.str() == "a");
  }
  SUBCASE("axis-generator prefix letters are absorbed") {
    const auto free2 = share(graph({"a", "b"}));
    const auto r = normalize_reflection(raag_word(free2, "b a^-1"), letter(*free2, "a"));
    CHECK(r.conjugator.str() == "b");
    CHECK(r.element.str() == "b a b^-1");
  }
}

TEST_CASE("is_trimmed") {
  const auto free2 = share(graph({"a", "b"}));
  SUBCASE("independent conjugates are trimmed") {
    const auto set = make_reflection_set(
        free2, {{raag_word(free2, ""), letter(*free2, "a")},
                {raag_word(free2, "b"), letter(*free2, "a")}});
    CHECK(is_trimmed(set));
  }
  SUBCASE("prefix violation is detected") {
    const auto set = make_reflection_set(
        free2, {{raag_word(free2, ""), letter(*free2, "a")},
                {raag_word(free2, "a"), letter(*free2, "b")}});
    TrimViolation v;
    CHECK_FALSE(is_trimmed(set, &v));
    CHECK(v.kind == "prefix");
  }
  SUBCASE("inverse pairs are rejected") {
    const auto set = make_reflection_set(
        free2, {{raag_word(free2, ""), letter(*free2, "a")},
                {raag_word(free2, ""), letter(*free2, "a", -1)}});
    TrimViolation v;
    CHECK_FALSE(is_trimmed(set, &v));
    CHECK(v.kind == "inverse_pair");
  }
}

TEST_CASE("trim") {
  const auto free2 = share(graph({"a", "b"}));
  SUBCASE("conjugated generator un-conjugates") {
    const auto set = make_reflection_set(
        free2, {{raag_word(free2, ""), letter(*free2, "a")},
                {raag_word(free2, "a"), letter(*free2, "b")}});
    const auto trimmed = trim(set);
    REQUIRE(trimmed.members.size() == 2);
    CHECK(trimmed.members[0].element.str() == "a");
    CHECK(trimmed.members[1].element.str() == "b");
    CHECK(is_trimmed(trimmed));
  }
  SUBCASE("already trimmed sets are unchanged") {
    const auto set = make_reflection_set(
        free2, {{raag_word(free2, ""), letter(*free2, "a")},
                {raag_word(free2, "b"), letter(*free2, "a")}});
    const auto trimmed = trim(set);
    REQUIRE(trimmed.members.size() == 2);
    CHECK(trimmed.members[0].element.str() == "a");
    CHECK(trimmed.members[1].element.str() == "b a b^-1");
  }
  SUBCASE("duplicates are dropped") {
    const auto set = make_reflection_set(
        free2, {{raag_word(free2, ""), letter(*free2, "a")},
                {raag_word(free2, ""), letter(*free2, "a")}});
    CHECK(trim(set).members.size() == 1);
  }
}

TEST_CASE("provenance certifies both directions") {
  const auto free2 = share(graph({"a", "b"}));
  const auto set = make_reflection_set(
      free2, {{raag_word(free2, ""), letter(*free2, "a")},
              {raag_word(free2, "a"), letter(*free2, "b")},
              {raag_word(free2, "a b"), letter(*free2, "a", -1)}});
  const auto trimmed = trim(set);
  for (std::size_t i = 0; i < trimmed.members.size(); ++i) {
    CHECK(equals(trimmed.eval_over_inputs(trimmed.provenance[i]), trimmed.members[i].element));
  }
  for (std::size_t i = 0; i < trimmed.inputs.size(); ++i) {
    CHECK(equals(trimmed.eval_over_members(trimmed.input_expr[i]), trimmed.inputs[i]));
  }
}

TEST_CASE("reflection presentations") {
  const auto free2 = share(graph({"a", "b"}));
  SUBCASE("a and bab^-1 generate a rank-2 free group") {
    const auto pres = reflection_raag_presentation(
        make_reflection_set(free2, {{raag_word(free2, ""), letter(*free2, "a")},
                                    {raag_word(free2, "b"), letter(*free2, "a")}}),
        8);
    CHECK(pres.delta.vertex_count() == 2);
    CHECK(pres.delta.edge_count() == 0);
    CHECK(pres.verified_to_depth == 8);
  }
  SUBCASE("the standard generators of Z^2") {
    const auto z2 = share(graph({"a", "b"}, {{"a", "b"}}));
    const auto pres = reflection_raag_presentation(
        make_reflection_set(z2, {{raag_word(z2, ""), letter(*z2, "a")},
                                 {raag_word(z2, ""), letter(*z2, "b")}}),
        8);
    CHECK(pres.delta.edge_count() == 1);
  }
  SUBCASE("two conjugates of one generator in the free rank-3 group") {
    const auto free3 = share(graph({"a", "b", "c"}));
    const auto pres = reflection_raag_presentation(
        make_reflection_set(free3, {{raag_word(free3, "a"), letter(*free3, "c")},
                                    {raag_word(free3, "b"), letter(*free3, "c")}}),
        8);
    CHECK(pres.delta.vertex_count() == 2);
    CHECK(pres.delta.edge_count() == 0);
  }
}

TEST_CASE("members have infinite order via the length formula") {
  const auto free2 = share(graph({"a", "b"}));
  const auto z2 = share(graph({"a", "b"}, {{"a", "b"}}));
  const std::vector<Reflection> members{
      normalize_reflection(raag_word(free2, "b"), letter(*free2, "a")),
      normalize_reflection(raag_word(free2, "b a"), letter(*free2, "b", -1)),
      normalize_reflection(raag_word(z2, ""), letter(*z2, "a")),
  };
  for (const auto& r : members) {
    for (int n = 1; n <= 5; ++n) {
      CHECK(reduce(r.element.power(n)).size() ==
            2 * r.conjugator.size() + static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("prefix length identity matches reduced-expression enumeration") {
  // |reduce(u^-1 v)| == |v| - |u| iff some reduced expression of v literally
  // begins with (a reduced expression of) u; checked by brute force over all
  // words.
  const auto g = share(graph({"a", "b", "c"}, {{"a", "b"}}));
  std::mt19937_64 rng(41);
  auto random_word = [&](std::size_t maxlen) {
    std::vector<Letter> ls;
    const std::size_t len = rng() % (maxlen + 1);
    for (std::size_t i = 0; i < len; ++i) {
      ls.push_back(Letter{static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1});
    }
    return GroupWord(g, false, ls);
  };
  auto begins_with = [&](const GroupWord& v, const GroupWord& u) {
    // enumerate all reduced expressions of v by swap closure
    const GroupWord rv = reduce(v);
    const GroupWord ru = reduce(u);
    if (ru.size() > rv.size()) return false;
    std::vector<std::vector<Letter>> closure{rv.letters()};
    std::set<std::string> seen;
    auto key = [](const std::vector<Letter>& w) {
      std::string s;
      for (const auto& l : w) {
        s += std::to_string(l.gen);
        s += l.sign < 0 ? '-' : '+';
      }
      return s;
    };
    seen.insert(key(rv.letters()));
    for (std::size_t head = 0; head < closure.size(); ++head) {
      const auto w = closure[head];
      const GroupWord prefix(g, false,
                             std::vector<Letter>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(
                                                                std::min(w.size(), ru.size()))));
      if (equals(prefix, ru)) return true;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] != w[i + 1] && wordops::letters_commute(*g, w[i], w[i + 1])) {
          auto swapped = w;
          std::swap(swapped[i], swapped[i + 1]);
          if (seen.insert(key(swapped)).second) closure.push_back(std::move(swapped));
        }
      }
    }
    return false;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = random_word(3);
    const auto v = random_word(5);
    const auto ru = reduce(u);
    const auto rv = reduce(v);
    if (ru.size() > rv.size()) continue;
    const bool by_length = reduce(ru.inverse() * rv).size() == rv.size() - ru.size();
    CHECK(by_length == begins_with(v, u));
  }
}

TEST_CASE("random reflection sets trim cleanly") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 120; ++trial) {
    const int nverts = 2 + static_cast<int>(rng() % 4);
    std::vector<std::string> names;
    for (int i = 0; i < nverts; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    EdgeList edges;
    for (int i = 0; i < nverts; ++i) {
      for (int j = i + 1; j < nverts; ++j) {
        if (rng() % 100 < 30) {
          edges.emplace_back(names[static_cast<std::size_t>(i)],
                             names[static_cast<std::size_t>(j)]);
        }
      }
    }
    const auto g = share(graph(names, edges));
    std::vector<std::pair<GroupWord, Letter>> raw;
    const std::size_t count = 1 + rng() % 4;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Letter> w;
      const std::size_t len = rng() % 5;
      for (std::size_t j = 0; j < len; ++j) {
        w.push_back(Letter{static_cast<int>(rng() % static_cast<std::uint64_t>(nverts)),
                           rng() % 2 ? 1 : -1});
      }
      raw.emplace_back(GroupWord(g, false, w),
                       Letter{static_cast<int>(rng() % static_cast<std::uint64_t>(nverts)),
                              rng() % 2 ? 1 : -1});
    }
    auto set = make_reflection_set(g, raw);
    const auto trimmed = trim(set);
    CHECK(is_trimmed(trimmed));
    // trim is idempotent on its own output
    const auto again = trim(trimmed);
    CHECK(again.members.size() == trimmed.members.size());
    for (std::size_t i = 0; i < trimmed.members.size(); ++i) {
      CHECK(again.members[i].element == trimmed.members[i].element);
      CHECK(equals(trimmed.eval_over_inputs(trimmed.provenance[i]),
                   trimmed.members[i].element));
    }
    for (std::size_t i = 0; i < trimmed.inputs.size(); ++i) {
      CHECK(equals(trimmed.eval_over_members(trimmed.input_expr[i]), trimmed.inputs[i]));
    }
  }
}

TEST_CASE("reflections file parsing") {
  const auto g = share(graph({"a", "b", "c"}, {{"a", "b"}}));
  std::istringstream in(
      "# two reflections\n"
      "w: a b^-1 ; s: c\n"
      "w: ; s: a\n");
  const auto rs = parse_reflections(in, g);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].conjugator.str() == "a b^-1");
  CHECK(rs[0].axis.gen == g->index("c"));
  CHECK(rs[1].conjugator.empty());

  std::istringstream bad("w: a ; t: b\n");
  CHECK_THROWS_AS(parse_reflections(bad, g), Error);
}

TEST_SUITE_END();
