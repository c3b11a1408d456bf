#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fends {

/// One generator or inverse generator.
struct Letter {
  std::uint16_t generator = 0;
  std::int8_t sign = 1;

  constexpr Letter inverse() const {
    return Letter{generator, static_cast<std::int8_t>(-sign)};
  }
  /// Position in the shortlex letter order a < A < b < B < ...
  constexpr int code() const { return 2 * generator + (sign < 0 ? 1 : 0); }
  static constexpr Letter from_code(int code) {
    return Letter{static_cast<std::uint16_t>(code / 2),
                  static_cast<std::int8_t>(code % 2 == 0 ? 1 : -1)};
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.code() <=> b.code();
  }
};

/// A freely reduced word over generators 0..rank-1.
///
/// Every constructor reduces, so a Word never holds a cancelling pair.
/// Words carry no alphabet bound; GroupModel::validate checks indices.
class Word {
public:
  Word() = default;
  explicit Word(std::span<const Letter> raw);
  Word(std::initializer_list<Letter> raw);

  const std::vector<Letter> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;

  /// Appends one letter, cancelling against the last letter if needed.
  void push_back(Letter l);

  friend Word operator*(const Word &u, const Word &v);
  friend Word operator*(Word u, Letter l) {
    u.push_back(l);
    return u;
  }

  friend bool operator==(const Word &, const Word &) = default;

  /// Shortlex: shorter first, then lexicographic in letter order.
  friend std::strong_ordering operator<=>(const Word &u, const Word &v);

  /// Alphabet-free rendering with a, b, ... and uppercase inverses; "1" for
  /// the identity. Only meaningful for up to 26 generators.
  std::string str() const;

private:
  std::vector<Letter> letters_;
};

/// Freely reduces a raw letter sequence. Throws InvalidWord if a letter
/// refers to a generator index >= rank.
Word free_reduce(std::span<const Letter> raw, int rank);

} // namespace fends
