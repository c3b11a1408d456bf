#include "fends/filtration.hpp"

#include <algorithm>
#include <utility>

#include "fends/error.hpp"

namespace fends {

std::string to_string(FiltrationKind kind) {
  switch (kind) {
  case FiltrationKind::MetricBall:
    return "metric-ball";
  case FiltrationKind::Regularized:
    return "regularized";
  case FiltrationKind::Custom:
    return "custom";
  }
  return "custom";
}

Filtration::Filtration(BallPtr base, std::vector<Subgraph> levels, FiltrationKind kind,
                       std::optional<int> depth)
    : base_(std::move(base)), levels_(std::move(levels)), kind_(kind) {
  if (levels_.empty())
    throw InvalidArgument("a filtration needs at least one level");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].ball_ptr() != base_)
      throw InvalidArgument("filtration level outside the base ball");
    if (i > 0 && !levels_[i - 1].is_subgraph_of(levels_[i]))
      throw InvalidArgument("filtration levels are not increasing at level " + std::to_string(i));
  }
  if (depth) {
    depth_ = *depth;
  } else {
    for (VertexId v : levels_.back().vertex_list())
      depth_ = std::max(depth_, base_->distance(v));
  }
}

Filtration ball_filtration(const BallPtr &base, int n_max) {
  if (n_max < 0 || n_max > base->radius())
    throw InvalidArgument("filtration depth " + std::to_string(n_max) +
                          " exceeds the base radius " + std::to_string(base->radius()));
  std::vector<Subgraph> levels;
  for (int n = 0; n <= n_max; ++n)
    levels.push_back(Subgraph::metric_ball(base, n));
  return Filtration(base, std::move(levels), FiltrationKind::MetricBall, n_max);
}

Filtration subsequence(const Filtration &f, std::size_t stride) {
  if (stride == 0)
    throw InvalidArgument("subsequence stride must be positive");
  std::vector<Subgraph> levels;
  for (std::size_t i = 0; i < f.size(); i += stride)
    levels.push_back(f.level(i));
  if ((f.size() - 1) % stride != 0)
    levels.push_back(f.levels().back());
  return Filtration(f.base(), std::move(levels), f.kind(), f.depth());
}

Filtration pullback(const Projection &p, const Filtration &f) {
  if (p.base() != f.base())
    throw InvalidArgument("filtration does not live on the projection's base");
  std::vector<Subgraph> levels;
  for (const Subgraph &level : f.levels())
    levels.push_back(preimage(p, level));
  return Filtration(p.cover(), std::move(levels), FiltrationKind::Custom);
}

WellFilteredCheck check_well_filtered(const Filtration &f, int interior) {
  const Ball &b = *f.base();
  if (interior < 0 || interior > b.radius())
    throw InvalidArgument("interior radius outside the base ball");
  WellFilteredCheck out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Subgraph n = cw_neighborhood(f.base(), f.level(i));
    std::vector<VertexId> verts;
    for (VertexId v : n.vertex_list())
      if (b.distance(v) <= interior)
        verts.push_back(v);
    std::vector<EdgeId> edges;
    for (EdgeId e : n.edge_list())
      if (b.distance(b.edge(e).source) <= interior && b.distance(b.edge(e).target) <= interior)
        edges.push_back(e);

    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < f.size() && !found; ++j) {
      const Subgraph &l = f.level(j);
      const bool inside =
          std::all_of(verts.begin(), verts.end(), [&](VertexId v) { return l.has_vertex(v); }) &&
          std::all_of(edges.begin(), edges.end(), [&](EdgeId e) { return l.has_edge(e); });
      if (inside)
        found = j;
    }
    out.absorbed_by.push_back(found);
    if (!found && out.ok) {
      out.ok = false;
      out.failing_level = i;
    }
  }
  return out;
}

Filtration regularize(const Filtration &f) {
  const BallPtr &base = f.base();
  std::vector<Subgraph> levels;
  for (const Subgraph &level : f.levels()) {
    const std::vector<Component> comps = components(cw_complement(base, level));
    std::vector<std::uint8_t> trapped(base->vertex_count(), 0);
    for (const Component &c : comps)
      if (!c.horizon)
        for (VertexId v : c.vertices)
          trapped[v] = 1;
    std::vector<std::uint8_t> verts = level.vertex_mask();
    std::vector<std::uint8_t> edges = level.edge_mask();
    for (std::size_t v = 0; v < verts.size(); ++v)
      verts[v] |= trapped[v];
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const Edge &edge = base->edge(static_cast<EdgeId>(e));
      if (trapped[edge.source] || trapped[edge.target])
        edges[e] = 1;
    }
    Subgraph augmented(base, std::move(verts), std::move(edges));
    if (!levels.empty())
      augmented = augmented.united(levels.back());
    levels.push_back(std::move(augmented));
  }
  return Filtration(base, std::move(levels), FiltrationKind::Regularized, f.depth());
}

} // namespace fends
