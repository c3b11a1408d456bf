#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fends {

using IntVector = std::vector<std::int64_t>;

/// Overflow-checked int64 arithmetic; throws ArithmeticOverflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Sublattice of Z^dimension spanned by a finite set of integer vectors,
/// stored as an echelon (Hermite) basis: rows with strictly increasing
/// positive pivot columns, entries above each pivot reduced into [0, pivot).
class IntegerLattice {
public:
  IntegerLattice(int dimension, std::vector<IntVector> generators);

  int dimension() const { return dimension_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<IntVector> &basis() const { return rows_; }
  const std::vector<int> &pivots() const { return pivot_cols_; }

  bool contains(std::span<const std::int64_t> v) const;

  /// Integer coordinates of v in basis(), or nullopt if v is not in the
  /// lattice.
  std::optional<IntVector> coordinates(std::span<const std::int64_t> v) const;

  /// Canonical representative of the coset v + L: every pivot coordinate
  /// reduced into [0, pivot).
  IntVector reduce(std::span<const std::int64_t> v) const;

  /// |Z^d : L| when rank == dimension (product of pivots), nullopt otherwise.
  std::optional<std::uint64_t> index() const;

private:
  int dimension_;
  std::vector<IntVector> rows_;
  std::vector<int> pivot_cols_;
};

/// Row-echelon Hermite form of an integer matrix; zero rows are dropped.
/// Returns the rows together with their pivot columns.
std::pair<std::vector<IntVector>, std::vector<int>>
hermite_rows(std::vector<IntVector> rows, int columns);

/// Floor division for signed integers.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

} // namespace fends
