#include "fends/projection.hpp"

#include <utility>

#include "fends/error.hpp"

namespace fends {

Projection::Projection(BallPtr cover, BallPtr base, std::vector<VertexId> vertex_map)
    : cover_(std::move(cover)), base_(std::move(base)), map_(std::move(vertex_map)) {
  if (map_.size() != cover_->vertex_count())
    throw InvalidArgument("projection map does not cover every vertex");
}

EdgeId Projection::image_edge(EdgeId cover_edge) const {
  const Edge &e = cover_->edge(cover_edge);
  const VertexId s = map_[e.source];
  if (s == kNoId || map_[e.target] == kNoId)
    return kNoId;
  const EdgeId out = base_->out_edge(s, e.generator);
  if (out == kNoId || base_->edge(out).target != map_[e.target])
    throw InconsistentBalls("projection is not label preserving");
  return out;
}

Projection project(const BallPtr &cover, const BallPtr &base) {
  if (!base->subgroup().contains_subgroup(cover->subgroup()))
    throw InconsistentBalls("cover subgroup is not contained in the base subgroup");
  std::vector<VertexId> map(cover->vertex_count(), kNoId);
  for (std::size_t i = 0; i < map.size(); ++i) {
    const auto v = static_cast<VertexId>(i);
    const Word &w = cover->representative(v);
    const auto image = base->locate(w);
    if (image) {
      map[i] = *image;
      continue;
    }
    // d(H w) <= |w|, so a short word's coset has to be present.
    if (base->complete() || static_cast<int>(w.size()) <= base->radius())
      throw InconsistentBalls("unmatched coset for cover vertex " + cover->model().format(w));
  }
  return Projection(cover, base, std::move(map));
}

Subgraph preimage(const Projection &p, const Subgraph &c) {
  if (c.ball_ptr() != p.base())
    throw InvalidArgument("preimage of a subgraph outside the projection's base");
  const Ball &cover = *p.cover();
  std::vector<std::uint8_t> verts(cover.vertex_count(), 0);
  std::vector<std::uint8_t> edges(cover.edge_count(), 0);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const VertexId image = p.image(static_cast<VertexId>(v));
    verts[v] = image != kNoId && c.has_vertex(image);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const EdgeId image = p.image_edge(static_cast<EdgeId>(e));
    edges[e] = image != kNoId && c.has_edge(image);
  }
  return Subgraph(p.cover(), std::move(verts), std::move(edges));
}

} // namespace fends
