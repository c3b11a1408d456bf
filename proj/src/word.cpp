#include "fends/word.hpp"

#include <algorithm>

#include "fends/error.hpp"

namespace fends {

Word::Word(std::span<const Letter> raw) {
  letters_.reserve(raw.size());
  for (Letter l : raw)
    push_back(l);
}

Word::Word(std::initializer_list<Letter> raw)
    : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

void Word::push_back(Letter l) {
  if (!letters_.empty() && letters_.back() == l.inverse())
    letters_.pop_back();
  else
    letters_.push_back(l);
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(it->inverse());
  return out;
}

Word operator*(const Word &u, const Word &v) {
  Word out = u;
  for (Letter l : v.letters_)
    out.push_back(l);
  return out;
}

std::strong_ordering operator<=>(const Word &u, const Word &v) {
  if (u.size() != v.size())
    return u.size() <=> v.size();
  return std::lexicographical_compare_three_way(
      u.letters_.begin(), u.letters_.end(), v.letters_.begin(),
      v.letters_.end());
}

std::string Word::str() const {
  if (letters_.empty())
    return "1";
  std::string out;
  for (Letter l : letters_) {
    if (!out.empty())
      out += ' ';
    char c = static_cast<char>('a' + l.generator);
    out += l.sign > 0 ? c : static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

Word free_reduce(std::span<const Letter> raw, int rank) {
  for (Letter l : raw) {
    if (l.generator >= rank || (l.sign != 1 && l.sign != -1))
      throw InvalidWord("letter with generator index " +
                        std::to_string(l.generator) +
                        " outside alphabet of rank " + std::to_string(rank));
  }
  return Word(raw);
}

} // namespace fends
