#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "vraag/graph.hpp"

namespace vraag {

struct Letter {
  int gen = 0;
  int sign = 1;  // +1 or -1; involutive words carry only +1

  bool operator==(const Letter&) const = default;
};

// Letter order used by the canonical form: generator name rank, then sign
// with +1 before -1.
inline bool letter_less(const Letter& a, const Letter& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.sign > b.sign;
}

inline constexpr std::size_t kMaxWordLetters = 1000000;

// A word in the RAAG (involutive = false) or RACG (involutive = true) over
// the ambient graph's vertex set.
class GroupWord {
public:
  GroupWord() = default;
  GroupWord(std::shared_ptr<const SimplicialGraph> ambient, bool involutive,
            std::vector<Letter> letters);
  static GroupWord parse(std::shared_ptr<const SimplicialGraph> ambient, bool involutive,
                         const std::string& literal);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool involutive() const { return involutive_; }
  const SimplicialGraph& ambient() const { return *ambient_; }
  const std::shared_ptr<const SimplicialGraph>& ambient_ptr() const { return ambient_; }

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& rhs) const;
  GroupWord power(int n) const;
  std::string str() const;  // "a b^-1 c"

  bool same_ambient(const GroupWord& other) const;
  bool operator==(const GroupWord& other) const;  // literal letters + semantics

private:
  std::shared_ptr<const SimplicialGraph> ambient_;
  bool involutive_ = false;
  std::vector<Letter> letters_;
};

// Canonical geodesic normal form: left-greedy cancellation to a geodesic,
// then the name-lexicographically least shuffle of it. Words represent the
// same element iff their normal forms are letterwise equal.
GroupWord reduce(const GroupWord& w);

bool equals(const GroupWord& u, const GroupWord& v);
bool commutes(const GroupWord& u, const GroupWord& v);

// Low-level helpers shared by the search layers. All operate on raw letter
// vectors over a fixed ambient graph.
namespace wordops {

inline bool letters_commute(const SimplicialGraph& g, const Letter& a, const Letter& b) {
  return a.gen == b.gen || g.adjacent(a.gen, b.gen);
}

inline bool inverse_pair(bool involutive, const Letter& a, const Letter& b) {
  return a.gen == b.gen && (involutive || a.sign == -b.sign);
}

// Left-greedy deletion of cancelling pairs; result is a geodesic.
void cancel_to_geodesic(const SimplicialGraph& g, bool involutive, std::vector<Letter>& ls);

// Reorder a geodesic into the lexicographically least shuffle-equivalent word.
void lex_least_shuffle(const SimplicialGraph& g, std::vector<Letter>& ls);

// Append one letter to a geodesic, cancelling if possible; keeps geodesy.
void append_letter(const SimplicialGraph& g, bool involutive, std::vector<Letter>& acc,
                   Letter x);

// Append a whole word letter by letter.
void append_word(const SimplicialGraph& g, bool involutive, std::vector<Letter>& acc,
                 const std::vector<Letter>& tail);

// True when ls is its own canonical normal form (geodesic and lex-least).
bool is_canonical(const SimplicialGraph& g, bool involutive, const std::vector<Letter>& ls);

// Incremental check: given canonical ls, may ls + x still be canonical?
bool extend_canonical(const SimplicialGraph& g, bool involutive, const std::vector<Letter>& ls,
                      Letter x);

}  // namespace wordops

}  // namespace vraag
