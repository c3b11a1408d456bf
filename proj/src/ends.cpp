#include "fends/ends.hpp"

#include <algorithm>
#include <utility>

#include "fends/error.hpp"

namespace fends {

std::size_t ComponentSystem::horizon_count(std::size_t level) const {
  const auto &comps = levels.at(level);
  return static_cast<std::size_t>(
      std::count_if(comps.begin(), comps.end(), [](const Component &c) { return c.horizon; }));
}

std::size_t ComponentSystem::trapped_count(std::size_t level) const {
  return levels.at(level).size() - horizon_count(level);
}

ComponentSystem component_system(const Projection &p, const Filtration &f, int margin) {
  if (p.base() != f.base())
    throw InvalidArgument("filtration does not live on the projection's base");
  if (margin < 0 || p.cover()->radius() < f.depth() + margin)
    throw InvalidArgument("cover radius " + std::to_string(p.cover()->radius()) +
                          " is smaller than filtration depth " + std::to_string(f.depth()) +
                          " plus margin " + std::to_string(margin));
  ComponentSystem cs;
  std::vector<std::vector<std::int32_t>> labels;
  for (const Subgraph &level : f.levels()) {
    const Subgraph rest = cw_complement(p.cover(), preimage(p, level));
    cs.levels.push_back(components(rest));
    labels.push_back(component_labels(rest, cs.levels.back()));
  }
  for (std::size_t n = 0; n + 1 < cs.levels.size(); ++n) {
    std::vector<std::size_t> map;
    for (const Component &c : cs.levels[n + 1]) {
      // Complements shrink as levels grow, so the whole component sits in
      // one level-n component.
      const std::int32_t parent = labels[n][c.vertices.front()];
      if (parent == kNoId)
        throw InvalidArgument("filtration levels are not nested");
      map.push_back(static_cast<std::size_t>(parent));
    }
    cs.inclusion.push_back(std::move(map));
  }
  return cs;
}

std::vector<std::vector<char>> surviving_components(const ComponentSystem &cs) {
  const std::size_t top = cs.levels.size() - 1;
  std::vector<std::vector<char>> alive(cs.levels.size());
  alive[top].resize(cs.levels[top].size());
  for (std::size_t i = 0; i < cs.levels[top].size(); ++i)
    alive[top][i] = cs.levels[top][i].horizon ? 1 : 0;
  for (std::size_t n = top; n-- > 0;) {
    alive[n].assign(cs.levels[n].size(), 0);
    for (std::size_t i = 0; i < cs.levels[n + 1].size(); ++i)
      if (alive[n + 1][i])
        alive[n][cs.inclusion[n][i]] = 1;
  }
  return alive;
}

EndsEstimate ends_estimate(const ComponentSystem &cs, std::size_t window) {
  if (window < 1 || cs.levels.size() < window + 1)
    throw InvalidArgument("ends estimate needs window + 1 levels (window " +
                          std::to_string(window) + ", levels " +
                          std::to_string(cs.levels.size()) + ")");
  const auto alive = surviving_components(cs);
  const std::size_t reported = cs.levels.size() - 1;

  EndsEstimate est;
  est.window = window;
  for (std::size_t n = 0; n < reported; ++n)
    est.counts.push_back(static_cast<std::size_t>(
        std::count(alive[n].begin(), alive[n].end(), static_cast<char>(1))));
  est.lower_bound = *std::max_element(est.counts.begin(), est.counts.end());

  const std::size_t first = reported - window;
  bool equal = true;
  bool increasing = window >= 2;
  for (std::size_t n = first; n + 1 < reported; ++n) {
    equal = equal && est.counts[n] == est.counts[n + 1];
    increasing = increasing && est.counts[n] < est.counts[n + 1];
  }
  est.increasing = increasing;

  bool bijective = equal;
  for (std::size_t n = first; bijective && n + 1 < reported; ++n) {
    // Surviving components of level n+1 must hit each surviving component of
    // level n exactly once.
    std::vector<int> hits(cs.levels[n].size(), 0);
    for (std::size_t i = 0; i < cs.levels[n + 1].size(); ++i)
      if (alive[n + 1][i])
        ++hits[cs.inclusion[n][i]];
    for (std::size_t j = 0; j < hits.size(); ++j)
      if (alive[n][j] && hits[j] != 1)
        bijective = false;
  }
  est.stabilized = bijective;
  if (est.stabilized)
    est.value = est.counts.back();
  return est;
}

namespace {

EndsEstimate summarize(const ComponentSystem &cs, const Projection &p, const Filtration &f,
                       const EndsParams &params) {
  EndsEstimate est = ends_estimate(cs, params.window);
  est.margin = params.effective_margin();
  const Ball &base = *p.base();
  if (base.complete() && f.levels().back().vertex_count() == base.vertex_count()) {
    // Exhausted finite base: the complement is eventually empty.
    est.stabilized = true;
    est.value = 0;
    est.saturated = true;
    est.increasing = false;
  }
  return est;
}

} // namespace

EndsEstimate estimate_with(const Projection &p, const Filtration &f, const EndsParams &params) {
  return summarize(component_system(p, f, params.effective_margin()), p, f, params);
}

namespace {

void check_params(const EndsParams &params) {
  if (params.n_max < 0)
    throw InvalidArgument("n_max must be non-negative");
  if (params.effective_margin() < 0)
    throw InvalidArgument("margin must be non-negative");
  if (params.window < 1)
    throw InvalidArgument("window must be at least 1");
}

EndsRun finish(BallPtr cover, BallPtr base, const EndsParams &params) {
  Projection p = project(cover, base);
  Filtration f = ball_filtration(base, params.n_max + 1);
  Filtration reg = regularize(f);
  ComponentSystem cs = component_system(p, reg, params.effective_margin());
  EndsEstimate est = summarize(cs, p, reg, params);
  return EndsRun{std::move(cover), std::move(base), std::move(p), std::move(f),
                 std::move(reg),   std::move(cs),   std::move(est)};
}

} // namespace

EndsRun run_group_ends(const GroupModel &m, const EndsParams &params) {
  check_params(params);
  BallPtr cover =
      cayley_ball(m, params.n_max + 1 + params.effective_margin(), params.vertex_budget);
  return finish(cover, cover, params);
}

EndsRun run_pair_ends(const GroupModel &m, const SubgroupSpec &h, const EndsParams &params) {
  check_params(params);
  BallPtr base = schreier_ball(m, h, params.n_max + 1, params.vertex_budget);
  BallPtr cover =
      cayley_ball(m, params.n_max + 1 + params.effective_margin(), params.vertex_budget);
  return finish(std::move(cover), std::move(base), params);
}

EndsEstimate group_ends(const GroupModel &m, const EndsParams &params) {
  return run_group_ends(m, params).estimate;
}

EndsEstimate pair_ends(const GroupModel &m, const SubgroupSpec &h, const EndsParams &params) {
  return run_pair_ends(m, h, params).estimate;
}

} // namespace fends
