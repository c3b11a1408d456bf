#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "fends/ball.hpp"

namespace fends {

/// Vertex and edge subsets of one Ball. Every edge's endpoints are in the
/// vertex subset (checked by the constructor).
class Subgraph {
public:
  explicit Subgraph(BallPtr ball);
  Subgraph(BallPtr ball, std::vector<std::uint8_t> vertices, std::vector<std::uint8_t> edges);

  static Subgraph empty(BallPtr ball) { return Subgraph(std::move(ball)); }
  static Subgraph whole(BallPtr ball);
  /// Vertices satisfying pred and every ball edge between two of them.
  static Subgraph induced(BallPtr ball, const std::function<bool(VertexId)> &pred);
  static Subgraph induced(BallPtr ball, const std::vector<VertexId> &vertices);
  /// Induced subgraph on the vertices at distance <= r.
  static Subgraph metric_ball(BallPtr ball, int r);

  const Ball &ball() const { return *ball_; }
  const BallPtr &ball_ptr() const { return ball_; }

  bool has_vertex(VertexId v) const { return vertices_[v] != 0; }
  bool has_edge(EdgeId e) const { return edges_[e] != 0; }
  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  std::vector<VertexId> vertex_list() const;
  std::vector<EdgeId> edge_list() const;
  const std::vector<std::uint8_t> &vertex_mask() const { return vertices_; }
  const std::vector<std::uint8_t> &edge_mask() const { return edges_; }

  /// Same ball and both subsets contained in other's.
  bool is_subgraph_of(const Subgraph &other) const;

  friend bool operator==(const Subgraph &a, const Subgraph &b) {
    return a.ball_ == b.ball_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

  Subgraph united(const Subgraph &other) const;

private:
  BallPtr ball_;
  std::vector<std::uint8_t> vertices_;
  std::vector<std::uint8_t> edges_;
};

/// Largest subgraph of g on the vertices of g outside a: those vertices and
/// every edge of g with both endpoints among them.
Subgraph cw_complement(const Subgraph &g, const Subgraph &a);
Subgraph cw_complement(const BallPtr &g, const Subgraph &a);

/// a together with every edge of g that has an endpoint in a, plus the
/// endpoints of those edges.
Subgraph cw_neighborhood(const Subgraph &g, const Subgraph &a);
Subgraph cw_neighborhood(const BallPtr &g, const Subgraph &a);

/// Edges of g lying neither in a nor in cw_complement(g, a). For an induced
/// a these are exactly the edges with one endpoint in a.
std::vector<EdgeId> bridge_edges(const Subgraph &g, const Subgraph &a);
std::vector<EdgeId> bridge_edges(const BallPtr &g, const Subgraph &a);

/// One path component. horizon is the truncation proxy for "unbounded": the
/// component reaches distance R in a ball that is not complete.
struct Component {
  std::vector<VertexId> vertices; // ascending
  bool horizon = false;
};

/// Path components of s, ordered by smallest vertex id.
std::vector<Component> components(const Subgraph &s);

/// Vertex -> index into components(s), kNoId off s.
std::vector<std::int32_t> component_labels(const Subgraph &s, const std::vector<Component> &comps);

} // namespace fends
