#include "vraag/word.hpp"

#include <algorithm>
#include <sstream>

#include "vraag/errors.hpp"

namespace vraag {

GroupWord::GroupWord(std::shared_ptr<const SimplicialGraph> ambient, bool involutive,
                     std::vector<Letter> letters)
    : ambient_(std::move(ambient)), involutive_(involutive), letters_(std::move(letters)) {
  if (!ambient_) fail(errc::internal, "word without ambient graph");
  if (letters_.size() > kMaxWordLetters) fail(errc::word_too_long, "word exceeds letter cap");
  for (auto& l : letters_) {
    if (l.gen < 0 || l.gen >= ambient_->vertex_count()) {
      fail(errc::unknown_vertex, "letter generator out of range");
    }
    if (l.sign != 1 && l.sign != -1) fail(errc::bad_params, "letter sign must be +1 or -1");
    if (involutive_) l.sign = 1;
  }
}

GroupWord GroupWord::parse(std::shared_ptr<const SimplicialGraph> ambient, bool involutive,
                           const std::string& literal) {
  std::vector<Letter> ls;
  std::istringstream in(literal);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      sign = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    ls.push_back(Letter{ambient->index(tok), sign});
  }
  return GroupWord(std::move(ambient), involutive, std::move(ls));
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> ls(letters_.rbegin(), letters_.rend());
  if (!involutive_) {
    for (auto& l : ls) l.sign = -l.sign;
  }
  return GroupWord(ambient_, involutive_, std::move(ls));
}

bool GroupWord::same_ambient(const GroupWord& other) const {
  return involutive_ == other.involutive_ &&
         (ambient_ == other.ambient_ || *ambient_ == *other.ambient_);
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  if (!same_ambient(rhs)) fail(errc::ambient_mismatch, "words over different groups");
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
  return GroupWord(ambient_, involutive_, std::move(ls));
}

GroupWord GroupWord::power(int n) const {
  GroupWord base = n < 0 ? inverse() : *this;
  std::vector<Letter> ls;
  for (int i = 0; i < std::abs(n); ++i) {
    ls.insert(ls.end(), base.letters_.begin(), base.letters_.end());
  }
  return GroupWord(ambient_, involutive_, std::move(ls));
}

std::string GroupWord::str() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += ambient_->name(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

bool GroupWord::operator==(const GroupWord& other) const {
  return involutive_ == other.involutive_ && letters_ == other.letters_ &&
         *ambient_ == *other.ambient_;
}

namespace wordops {

void cancel_to_geodesic(const SimplicialGraph& g, bool involutive, std::vector<Letter>& ls) {
  bool again = true;
  while (again) {
    again = false;
    const std::size_t n = ls.size();
    for (std::size_t i = 0; i + 1 < n && !again; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (inverse_pair(involutive, ls[i], ls[j])) {
          ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(j));
          ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
          again = true;
          break;
        }
        if (!letters_commute(g, ls[i], ls[j])) break;
      }
    }
  }
}

void lex_least_shuffle(const SimplicialGraph& g, std::vector<Letter>& ls) {
  std::vector<Letter> rem = std::move(ls);
  ls.clear();
  ls.reserve(rem.size());
  while (!rem.empty()) {
    std::size_t best = 0;
    bool have = false;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      bool movable = true;
      for (std::size_t k = 0; k < i; ++k) {
        if (!letters_commute(g, rem[k], rem[i])) {
          movable = false;
          break;
        }
      }
      if (movable && (!have || letter_less(rem[i], rem[best]))) {
        best = i;
        have = true;
      }
    }
    ls.push_back(rem[best]);
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(best));
  }
}

void append_letter(const SimplicialGraph& g, bool involutive, std::vector<Letter>& acc,
                   Letter x) {
  for (std::size_t k = acc.size(); k-- > 0;) {
    if (inverse_pair(involutive, acc[k], x)) {
      acc.erase(acc.begin() + static_cast<std::ptrdiff_t>(k));
      return;
    }
    if (!letters_commute(g, acc[k], x)) break;
  }
  acc.push_back(x);
}

void append_word(const SimplicialGraph& g, bool involutive, std::vector<Letter>& acc,
                 const std::vector<Letter>& tail) {
  for (const Letter& x : tail) append_letter(g, involutive, acc, x);
}

bool extend_canonical(const SimplicialGraph& g, bool involutive, const std::vector<Letter>& ls,
                      Letter x) {
  // ls + x stays geodesic iff x cancels nothing, and stays lex-least iff no
  // letter in x's commuting suffix exceeds x.
  for (std::size_t k = ls.size(); k-- > 0;) {
    if (inverse_pair(involutive, ls[k], x)) return false;
    if (!letters_commute(g, ls[k], x)) break;
    if (letter_less(x, ls[k])) return false;
  }
  return true;
}

bool is_canonical(const SimplicialGraph& g, bool involutive, const std::vector<Letter>& ls) {
  std::vector<Letter> prefix;
  prefix.reserve(ls.size());
  for (const Letter& x : ls) {
    if (!extend_canonical(g, involutive, prefix, x)) return false;
    prefix.push_back(x);
  }
  return true;
}

}  // namespace wordops

GroupWord reduce(const GroupWord& w) {
  std::vector<Letter> ls = w.letters();
  wordops::cancel_to_geodesic(w.ambient(), w.involutive(), ls);
  wordops::lex_least_shuffle(w.ambient(), ls);
  return GroupWord(w.ambient_ptr(), w.involutive(), std::move(ls));
}

bool equals(const GroupWord& u, const GroupWord& v) {
  if (!u.same_ambient(v)) fail(errc::ambient_mismatch, "words over different groups");
  std::vector<Letter> ls = u.letters();
  wordops::cancel_to_geodesic(u.ambient(), u.involutive(), ls);
  const GroupWord vi = v.inverse();
  wordops::append_word(u.ambient(), u.involutive(), ls, vi.letters());
  return ls.empty();
}

bool commutes(const GroupWord& u, const GroupWord& v) { return equals(u * v, v * u); }

}  // namespace vraag
