#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fends/word.hpp"

namespace fends {

/// Folded subgroup graph of a finitely generated subgroup of a free group.
///
/// Built from a wedge of one loop per generator word at the base state, then
/// folded until no state has two edges with the same label. The result is
/// deterministic: a reduced word lies in the subgroup iff reading it from the
/// base state succeeds and returns to the base.
class FoldedAutomaton {
public:
  static constexpr int kNone = -1;

  FoldedAutomaton(int rank, std::span<const Word> generators);

  int rank() const { return rank_; }
  int state_count() const { return states_; }
  static constexpr int base() { return 0; }

  /// Target of the edge labelled l out of state, or kNone.
  int step(int state, Letter l) const {
    return table_[static_cast<std::size_t>(state) * 2 * rank_ + l.code()];
  }

  struct Trace {
    int state = 0;
    std::size_t consumed = 0;
  };
  /// Reads w from the base as far as the edges allow.
  Trace trace(const Word &w) const;

  bool accepts(const Word &w) const;

  /// Every state has an edge for every letter, i.e. the graph is a finite
  /// cover of the rose and the subgroup has finite index (= state_count).
  bool complete() const;

  /// Number of edges outside a breadth-first spanning tree; the rank of the
  /// subgroup.
  int basis_rank() const { return basis_rank_; }

  /// Rewrites a member of the subgroup as a word in the free basis given by
  /// the non-tree edges. Throws InvalidArgument if w is not a member.
  Word rewrite(const Word &w) const;

private:
  int rank_ = 0;
  int states_ = 0;
  std::vector<int> table_;
  // Basis index of the positive edge (state, generator), or kNone for tree
  // edges and missing edges.
  std::vector<int> edge_basis_;
  int basis_rank_ = 0;
};

} // namespace fends
