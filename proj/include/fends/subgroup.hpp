#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fends/folding.hpp"
#include "fends/group_model.hpp"
#include "fends/lattice.hpp"
#include "fends/word.hpp"

namespace fends {

/// Generators of a subgroup. For direct products the subgroup must be a
/// product of factor subgroups: either give factor_generators (one list per
/// factor, each using only that factor's letters), or plain generators that
/// each involve a single factor.
struct SubgroupSpec {
  std::vector<Word> generators;
  std::optional<std::vector<std::vector<Word>>> factor_generators;

  static SubgroupSpec trivial() { return {}; }
  static SubgroupSpec of(std::vector<Word> gens) { return {std::move(gens), std::nullopt}; }
};

/// [G:H] or [H:K].
class IndexClass {
public:
  static IndexClass finite(std::uint64_t n);
  static IndexClass infinite() { return IndexClass{}; }

  bool is_finite() const { return value_.has_value(); }
  /// Requires is_finite().
  std::uint64_t value() const { return *value_; }
  std::string str() const { return value_ ? std::to_string(*value_) : "infinite"; }

  friend bool operator==(const IndexClass &, const IndexClass &) = default;

private:
  std::optional<std::uint64_t> value_;
};

/// Membership oracle for a subgroup of a GroupModel, compiled once and then
/// immutable. Free factors use a folded automaton, free abelian factors an
/// integer lattice.
class Subgroup {
public:
  Subgroup(GroupModel model, SubgroupSpec spec);

  const GroupModel &model() const { return model_; }
  const SubgroupSpec &spec() const { return spec_; }
  /// All generators, distributed per factor, in global letters.
  const std::vector<std::vector<Word>> &factor_generators() const { return per_factor_; }
  bool is_trivial() const;

  bool contains(const Word &w) const;

  /// Key shared by exactly the words of one right coset H w.
  std::string coset_key(const Word &w) const;

  /// [G : this].
  IndexClass index() const;

  /// Every generator of other is a member of this.
  bool contains_subgroup(const Subgroup &other) const;

  /// [this : smaller]. Throws ChainViolation unless smaller <= this.
  IndexClass index_of(const Subgroup &smaller) const;

private:
  using Oracle = std::variant<FoldedAutomaton, IntegerLattice>;

  GroupModel model_;
  SubgroupSpec spec_;
  std::vector<std::vector<Word>> per_factor_;
  std::vector<Oracle> oracles_;
};

/// True iff w lies in the subgroup generated by s.
bool is_member(const GroupModel &m, const SubgroupSpec &s, const Word &w);

IndexClass subgroup_index(const GroupModel &m, const SubgroupSpec &s);

/// [H:K] for K <= H; throws ChainViolation otherwise.
IndexClass relative_index(const GroupModel &m, const SubgroupSpec &h, const SubgroupSpec &k);

} // namespace fends
