#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fends/ball.hpp"
#include "fends/filtration.hpp"
#include "fends/group_model.hpp"
#include "fends/projection.hpp"
#include "fends/subgraph.hpp"
#include "fends/subgroup.hpp"

namespace fends {

/// Components of cover minus p^-1(L_n) for every level n, with the maps
/// sending each level n+1 component to the level n component containing it.
struct ComponentSystem {
  std::vector<std::vector<Component>> levels;
  /// inclusion[n][i] is the level-n component containing component i of
  /// level n+1.
  std::vector<std::vector<std::size_t>> inclusion;

  std::size_t horizon_count(std::size_t level) const;
  std::size_t trapped_count(std::size_t level) const;
};

/// Requires cover radius >= f.depth() + margin.
ComponentSystem component_system(const Projection &p, const Filtration &f, int margin);

struct EndsEstimate {
  /// e_n for every level but the top: horizon components at level n that
  /// contain a horizon component of the top level. Components that die out
  /// before the top are bounded and are not counted.
  std::vector<std::size_t> counts;
  bool stabilized = false;
  /// Set iff stabilized.
  std::optional<std::size_t> value;
  /// max e_n.
  std::size_t lower_bound = 0;
  /// Counts strictly increase across the window: the signal for infinitely
  /// many ends. Never a number.
  bool increasing = false;
  std::size_t window = 0;
  int margin = 0;
  /// Stabilized at 0 because the finite base was exhausted.
  bool saturated = false;
};

/// Horizon components of each level that survive to the top level, marked
/// per level. The top level marks all of its horizon components.
std::vector<std::vector<char>> surviving_components(const ComponentSystem &cs);

/// The top level of cs is a look-ahead: counts are reported for the levels
/// below it, so cs needs at least window + 1 levels. Stabilized iff the last
/// `window` counts agree and the inclusion maps are bijections on surviving
/// components across those levels.
EndsEstimate ends_estimate(const ComponentSystem &cs, std::size_t window);

struct EndsParams {
  int n_max = 5;
  /// Defaults to n_max.
  std::optional<int> margin;
  std::size_t window = 3;
  std::size_t vertex_budget = kDefaultVertexBudget;

  int effective_margin() const { return margin.value_or(n_max); }
};

/// Every intermediate object of one end computation. The filtration runs to
/// depth n_max + 1; the extra level is the estimator's look-ahead.
struct EndsRun {
  BallPtr cover;
  BallPtr base;
  Projection projection;
  Filtration filtration;  // metric-ball filtration of the base
  Filtration regularized; // after absorbing trapped components
  ComponentSystem system;
  EndsEstimate estimate;
};

/// e(G) from a Cayley ball of radius n_max + 1 + margin projected onto
/// itself.
EndsRun run_group_ends(const GroupModel &m, const EndsParams &params);
/// e(G,H): Schreier ball of H (radius n_max + 1) as base, Cayley ball
/// (radius n_max + 1 + margin) as cover.
EndsRun run_pair_ends(const GroupModel &m, const SubgroupSpec &h, const EndsParams &params);

EndsEstimate group_ends(const GroupModel &m, const EndsParams &params);
EndsEstimate pair_ends(const GroupModel &m, const SubgroupSpec &h, const EndsParams &params);

/// Same pipeline for an arbitrary filtration of the base.
EndsEstimate estimate_with(const Projection &p, const Filtration &f, const EndsParams &params);

} // namespace fends
