#include "fends/subgraph.hpp"

#include <algorithm>
#include <utility>

#include "fends/error.hpp"
#include "fends/union_find.hpp"

namespace fends {

Subgraph::Subgraph(BallPtr ball)
    : ball_(std::move(ball)), vertices_(ball_->vertex_count(), 0), edges_(ball_->edge_count(), 0) {}

Subgraph::Subgraph(BallPtr ball, std::vector<std::uint8_t> vertices,
                   std::vector<std::uint8_t> edges)
    : ball_(std::move(ball)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.size() != ball_->vertex_count() || edges_.size() != ball_->edge_count())
    throw InvalidArgument("subgraph masks do not match the ball");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!edges_[e])
      continue;
    const Edge &edge = ball_->edge(static_cast<EdgeId>(e));
    if (!vertices_[edge.source] || !vertices_[edge.target])
      throw InvalidArgument("subgraph edge with an endpoint outside the vertex set");
  }
}

Subgraph Subgraph::whole(BallPtr ball) {
  const std::size_t nv = ball->vertex_count();
  const std::size_t ne = ball->edge_count();
  return Subgraph(std::move(ball), std::vector<std::uint8_t>(nv, 1),
                  std::vector<std::uint8_t>(ne, 1));
}

Subgraph Subgraph::induced(BallPtr ball, const std::function<bool(VertexId)> &pred) {
  Subgraph s(std::move(ball));
  for (std::size_t v = 0; v < s.vertices_.size(); ++v)
    s.vertices_[v] = pred(static_cast<VertexId>(v)) ? 1 : 0;
  for (std::size_t e = 0; e < s.edges_.size(); ++e) {
    const Edge &edge = s.ball_->edge(static_cast<EdgeId>(e));
    s.edges_[e] = s.vertices_[edge.source] && s.vertices_[edge.target];
  }
  return s;
}

Subgraph Subgraph::induced(BallPtr ball, const std::vector<VertexId> &vertices) {
  std::vector<std::uint8_t> mask(ball->vertex_count(), 0);
  for (VertexId v : vertices)
    mask.at(static_cast<std::size_t>(v)) = 1;
  return induced(std::move(ball), [&](VertexId v) { return mask[v] != 0; });
}

Subgraph Subgraph::metric_ball(BallPtr ball, int r) {
  const Ball *b = ball.get();
  return induced(std::move(ball), [b, r](VertexId v) { return b->distance(v) <= r; });
}

std::size_t Subgraph::vertex_count() const {
  return static_cast<std::size_t>(std::count(vertices_.begin(), vertices_.end(), 1));
}

std::size_t Subgraph::edge_count() const {
  return static_cast<std::size_t>(std::count(edges_.begin(), edges_.end(), 1));
}

std::vector<VertexId> Subgraph::vertex_list() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v])
      out.push_back(static_cast<VertexId>(v));
  return out;
}

std::vector<EdgeId> Subgraph::edge_list() const {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e])
      out.push_back(static_cast<EdgeId>(e));
  return out;
}

bool Subgraph::is_subgraph_of(const Subgraph &other) const {
  if (ball_ != other.ball_)
    return false;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v] && !other.vertices_[v])
      return false;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e] && !other.edges_[e])
      return false;
  return true;
}

Subgraph Subgraph::united(const Subgraph &other) const {
  if (ball_ != other.ball_)
    throw InvalidArgument("union of subgraphs of different balls");
  Subgraph out = *this;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    out.vertices_[v] |= other.vertices_[v];
  for (std::size_t e = 0; e < edges_.size(); ++e)
    out.edges_[e] |= other.edges_[e];
  return out;
}

namespace {

void require_same_ball(const Subgraph &g, const Subgraph &a) {
  if (g.ball_ptr() != a.ball_ptr())
    throw InvalidArgument("subgraphs live in different balls");
}

} // namespace

Subgraph cw_complement(const Subgraph &g, const Subgraph &a) {
  require_same_ball(g, a);
  const Ball &b = g.ball();
  std::vector<std::uint8_t> verts(b.vertex_count(), 0);
  std::vector<std::uint8_t> edges(b.edge_count(), 0);
  for (std::size_t v = 0; v < verts.size(); ++v)
    verts[v] = g.has_vertex(static_cast<VertexId>(v)) && !a.has_vertex(static_cast<VertexId>(v));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge &edge = b.edge(static_cast<EdgeId>(e));
    edges[e] = g.has_edge(static_cast<EdgeId>(e)) && verts[edge.source] && verts[edge.target];
  }
  return Subgraph(g.ball_ptr(), std::move(verts), std::move(edges));
}

Subgraph cw_complement(const BallPtr &g, const Subgraph &a) {
  return cw_complement(Subgraph::whole(g), a);
}

Subgraph cw_neighborhood(const Subgraph &g, const Subgraph &a) {
  require_same_ball(g, a);
  const Ball &b = g.ball();
  std::vector<std::uint8_t> verts = a.vertex_mask();
  std::vector<std::uint8_t> edges = a.edge_mask();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!g.has_edge(static_cast<EdgeId>(e)))
      continue;
    const Edge &edge = b.edge(static_cast<EdgeId>(e));
    if (a.has_vertex(edge.source) || a.has_vertex(edge.target)) {
      edges[e] = 1;
      verts[edge.source] = 1;
      verts[edge.target] = 1;
    }
  }
  return Subgraph(g.ball_ptr(), std::move(verts), std::move(edges));
}

Subgraph cw_neighborhood(const BallPtr &g, const Subgraph &a) {
  return cw_neighborhood(Subgraph::whole(g), a);
}

std::vector<EdgeId> bridge_edges(const Subgraph &g, const Subgraph &a) {
  require_same_ball(g, a);
  const Ball &b = g.ball();
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < b.edge_count(); ++i) {
    const auto e = static_cast<EdgeId>(i);
    if (!g.has_edge(e) || a.has_edge(e))
      continue;
    const Edge &edge = b.edge(e);
    // Not in the complement: some endpoint lies in a.
    if (a.has_vertex(edge.source) || a.has_vertex(edge.target))
      out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> bridge_edges(const BallPtr &g, const Subgraph &a) {
  return bridge_edges(Subgraph::whole(g), a);
}

std::vector<Component> components(const Subgraph &s) {
  const Ball &b = s.ball();
  UnionFind uf(b.vertex_count());
  for (EdgeId e : s.edge_list())
    uf.unite(static_cast<std::size_t>(b.edge(e).source), static_cast<std::size_t>(b.edge(e).target));

  std::vector<std::int32_t> slot(b.vertex_count(), kNoId);
  std::vector<Component> out;
  for (VertexId v : s.vertex_list()) {
    const std::size_t root = uf.find(static_cast<std::size_t>(v));
    if (slot[root] == kNoId) {
      slot[root] = static_cast<std::int32_t>(out.size());
      out.emplace_back();
    }
    Component &c = out[static_cast<std::size_t>(slot[root])];
    c.vertices.push_back(v);
    if (!b.complete() && (b.distance(v) == b.radius() || b.on_frontier(v)))
      c.horizon = true;
  }
  return out;
}

std::vector<std::int32_t> component_labels(const Subgraph &s, const std::vector<Component> &comps) {
  std::vector<std::int32_t> label(s.ball().vertex_count(), kNoId);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (VertexId v : comps[i].vertices)
      label[v] = static_cast<std::int32_t>(i);
  return label;
}

} // namespace fends
