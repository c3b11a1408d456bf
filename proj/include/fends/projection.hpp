#pragma once

#include <vector>

#include "fends/ball.hpp"
#include "fends/subgraph.hpp"

namespace fends {

/// Covering projection from a cover ball (Cayley, or Schreier of K <= H) to
/// the Schreier ball of H, restricted to the truncations: a cover vertex whose
/// coset lies beyond the base radius is left unmapped (kNoId).
class Projection {
public:
  Projection(BallPtr cover, BallPtr base, std::vector<VertexId> vertex_map);

  const BallPtr &cover() const { return cover_; }
  const BallPtr &base() const { return base_; }
  VertexId image(VertexId cover_vertex) const { return map_[cover_vertex]; }
  /// Image of a cover edge, or kNoId when an endpoint is unmapped.
  EdgeId image_edge(EdgeId cover_edge) const;
  const std::vector<VertexId> &vertex_map() const { return map_; }

private:
  BallPtr cover_;
  BallPtr base_;
  std::vector<VertexId> map_;
};

/// Maps each cover vertex w to the base vertex of the coset H w. The base
/// must be a Schreier ball of a subgroup containing the cover's subgroup.
/// Throws InconsistentBalls when a coset that must be in the base is missing
/// or the subgroups are not nested.
Projection project(const BallPtr &cover, const BallPtr &base);

/// All cover vertices and edges whose images lie in c.
Subgraph preimage(const Projection &p, const Subgraph &c);

} // namespace fends
