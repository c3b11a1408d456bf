#include "fends/lattice.hpp"

#include <algorithm>
#include <utility>

#include "fends/error.hpp"

namespace fends {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

namespace {

// row -= factor * other
void axpy(IntVector &row, std::int64_t factor, const IntVector &other) {
  if (factor == 0)
    return;
  for (std::size_t c = 0; c < row.size(); ++c)
    row[c] = checked_sub(row[c], checked_mul(factor, other[c]));
}

std::int64_t checked_abs(std::int64_t a) {
  if (a == INT64_MIN)
    throw ArithmeticOverflow("integer overflow in lattice arithmetic");
  return a < 0 ? -a : a;
}

} // namespace

std::pair<std::vector<IntVector>, std::vector<int>>
hermite_rows(std::vector<IntVector> rows, int columns) {
  for (const IntVector &r : rows)
    if (static_cast<int>(r.size()) != columns)
      throw InvalidArgument("lattice generator has the wrong dimension");

  std::vector<int> pivots;
  std::size_t top = 0;
  for (int c = 0; c < columns && top < rows.size(); ++c) {
    // Euclid on column c among rows[top..]: keep the smallest nonzero entry
    // at `top` and reduce the rest until they vanish.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][c] == 0)
          continue;
        if (best == rows.size() || checked_abs(rows[r][c]) < checked_abs(rows[best][c]))
          best = r;
      }
      if (best == rows.size())
        break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0)
          continue;
        axpy(rows[r], rows[r][c] / rows[top][c], rows[top]);
        if (rows[r][c] != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (rows[top][c] == 0)
      continue;
    if (rows[top][c] < 0)
      for (auto &x : rows[top])
        x = checked_sub(0, x);
    for (std::size_t r = 0; r < top; ++r)
      axpy(rows[r], floor_div(rows[r][c], rows[top][c]), rows[top]);
    pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  return {std::move(rows), std::move(pivots)};
}

IntegerLattice::IntegerLattice(int dimension, std::vector<IntVector> generators)
    : dimension_(dimension) {
  if (dimension < 0)
    throw InvalidArgument("negative lattice dimension");
  auto [rows, pivots] = hermite_rows(std::move(generators), dimension);
  rows_ = std::move(rows);
  pivot_cols_ = std::move(pivots);
}

std::optional<IntVector>
IntegerLattice::coordinates(std::span<const std::int64_t> v) const {
  if (static_cast<int>(v.size()) != dimension_)
    throw InvalidArgument("vector has the wrong dimension");
  IntVector rest(v.begin(), v.end());
  IntVector coords(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int c = pivot_cols_[i];
    const std::int64_t p = rows_[i][c];
    if (rest[c] % p != 0)
      return std::nullopt;
    coords[i] = rest[c] / p;
    axpy(rest, coords[i], rows_[i]);
  }
  for (std::int64_t x : rest)
    if (x != 0)
      return std::nullopt;
  return coords;
}

bool IntegerLattice::contains(std::span<const std::int64_t> v) const {
  return coordinates(v).has_value();
}

IntVector IntegerLattice::reduce(std::span<const std::int64_t> v) const {
  if (static_cast<int>(v.size()) != dimension_)
    throw InvalidArgument("vector has the wrong dimension");
  IntVector rest(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int c = pivot_cols_[i];
    axpy(rest, floor_div(rest[c], rows_[i][c]), rows_[i]);
  }
  return rest;
}

std::optional<std::uint64_t> IntegerLattice::index() const {
  if (rank() != dimension_)
    return std::nullopt;
  std::int64_t det = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    det = checked_mul(det, rows_[i][pivot_cols_[i]]);
  return static_cast<std::uint64_t>(det);
}

} // namespace fends
