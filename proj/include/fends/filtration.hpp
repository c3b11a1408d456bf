#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fends/ball.hpp"
#include "fends/projection.hpp"
#include "fends/subgraph.hpp"

namespace fends {

enum class FiltrationKind { MetricBall, Regularized, Custom };

std::string to_string(FiltrationKind kind);

/// Increasing sequence of finite subgraphs L0 <= L1 <= ... of one ball.
class Filtration {
public:
  /// depth is the nominal radius of the top level; it defaults to the
  /// largest base distance reached by the top level.
  Filtration(BallPtr base, std::vector<Subgraph> levels, FiltrationKind kind,
             std::optional<int> depth = std::nullopt);

  const BallPtr &base() const { return base_; }
  const std::vector<Subgraph> &levels() const { return levels_; }
  const Subgraph &level(std::size_t i) const { return levels_.at(i); }
  std::size_t size() const { return levels_.size(); }
  FiltrationKind kind() const { return kind_; }
  int depth() const { return depth_; }

private:
  BallPtr base_;
  std::vector<Subgraph> levels_;
  FiltrationKind kind_;
  int depth_ = 0;
};

/// Level n = metric ball of radius n in base, for n = 0..n_max.
Filtration ball_filtration(const BallPtr &base, int n_max);

/// Every stride-th level, starting from level 0 and always keeping the top.
Filtration subsequence(const Filtration &f, std::size_t stride);

/// Levels p^-1(L_n) in the cover.
Filtration pullback(const Projection &p, const Filtration &f);

struct WellFilteredCheck {
  bool ok = true;
  /// First level whose neighbourhood no level absorbs.
  std::optional<std::size_t> failing_level;
  /// For each level i, the least j with N(L_i) inside L_j (within the
  /// interior), when one exists.
  std::vector<std::optional<std::size_t>> absorbed_by;
};

/// For each level i looks for j with N(L_i) restricted to the interior
/// region (vertices at distance <= interior, edges between them) contained
/// in L_j.
WellFilteredCheck check_well_filtered(const Filtration &f, int interior);

/// Adds to every level the components of its complement that do not reach
/// the horizon, with their attaching edges, then takes cumulative unions so
/// the result stays increasing.
Filtration regularize(const Filtration &f);

} // namespace fends
