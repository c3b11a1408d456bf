#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fends/word.hpp"

namespace fends {

enum class Family { Free, FreeAbelian, Product };

/// A free or free abelian factor occupying generators
/// [offset, offset + rank) of the ambient alphabet.
struct Factor {
  Family family = Family::Free;
  int rank = 1;
  int offset = 0;

  friend bool operator==(const Factor &, const Factor &) = default;
};

/// A finitely generated group with a decidable word problem: a free group,
/// a free abelian group, or a direct product of those. Nested products are
/// flattened, so factors() only ever holds Free and FreeAbelian entries.
///
/// Generators are named a, b, c, ... in index order and an uppercase letter
/// is the inverse. A free abelian group of rank <= 3 also accepts (and
/// prints) x, y, z.
class GroupModel {
public:
  static GroupModel free_group(int rank);
  static GroupModel free_abelian(int rank);
  static GroupModel direct_product(std::vector<GroupModel> factors);

  Family family() const { return family_; }
  int generator_count() const { return generators_; }
  const std::vector<Factor> &factors() const { return factors_; }
  /// Index into factors() of the factor owning generator g.
  int factor_of(int generator) const;

  char generator_name(int generator) const;
  /// Parses "a b A", "aB", "x y X", or "1" / "" for the identity.
  Word parse(std::string_view text) const;
  std::string format(const Word &w) const;
  /// Short human description such as "F2", "Z^3" or "F2 x Z".
  std::string describe() const;

  /// Throws InvalidWord if w uses a letter outside the alphabet.
  void validate(const Word &w) const;

  friend bool operator==(const GroupModel &, const GroupModel &) = default;

private:
  GroupModel() = default;

  Family family_ = Family::Free;
  int generators_ = 0;
  std::vector<Factor> factors_;
  bool xyz_names_ = false;
};

/// Canonical word for the element w: the word itself for free groups,
/// sorted signed multiplicities for free abelian groups, and per-factor
/// normal forms concatenated in factor order for products.
Word normal_form(const GroupModel &m, const Word &w);

/// Subword of w made of the letters of one factor, re-indexed to start at 0.
Word factor_part(const GroupModel &m, int factor, const Word &w);

/// Exponent sums per generator of a word in a free abelian factor.
std::vector<long long> exponent_vector(const Word &local, int rank);

} // namespace fends
