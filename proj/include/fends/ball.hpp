#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fends/group_model.hpp"
#include "fends/subgroup.hpp"
#include "fends/word.hpp"

namespace fends {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
inline constexpr std::int32_t kNoId = -1;

inline constexpr std::size_t kDefaultVertexBudget = 500000;

/// Directed, generator-labelled edge: target = source * generator.
struct Edge {
  VertexId source = kNoId;
  VertexId target = kNoId;
  std::uint16_t generator = 0;
};

enum class BallKind { Cayley, Schreier };

/// Metric ball of radius R around the base vertex of a Cayley graph
/// (vertices = group elements) or Schreier graph (vertices = right cosets
/// H g, edges H g -> H g s). The ball is the induced subgraph on vertices at
/// distance <= R. complete is set when no vertex has a neighbour outside the
/// ball, i.e. the whole (finite) graph was exhausted.
class Ball {
public:
  BallKind kind() const { return kind_; }
  const GroupModel &model() const { return subgroup_->model(); }
  const Subgroup &subgroup() const { return *subgroup_; }
  std::shared_ptr<const Subgroup> subgroup_ptr() const { return subgroup_; }
  int radius() const { return radius_; }
  bool complete() const { return complete_; }

  std::size_t vertex_count() const { return keys_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Canonical key: the normal form (Cayley) or the first-discovered
  /// shortlex coset representative (Schreier).
  const Word &key(VertexId v) const { return keys_[v]; }
  /// Shortlex-least geodesic word reaching v from the base.
  const Word &representative(VertexId v) const { return reps_[v]; }
  int distance(VertexId v) const { return distance_[v]; }
  /// v has a neighbour that lies outside the ball.
  bool on_frontier(VertexId v) const { return frontier_[v] != 0; }

  const Edge &edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge> &edges() const { return edges_; }
  /// Edge v -> v*g, or kNoId if that neighbour is outside the ball.
  EdgeId out_edge(VertexId v, int generator) const {
    return out_[static_cast<std::size_t>(v) * gens_ + generator];
  }
  /// Edge v*g^-1 -> v, or kNoId.
  EdgeId in_edge(VertexId v, int generator) const {
    return in_[static_cast<std::size_t>(v) * gens_ + generator];
  }

  /// Vertex of the element / coset represented by w, if it is in the ball.
  std::optional<VertexId> locate(const Word &w) const;

  /// Vertex whose canonical key is exactly key.
  std::optional<VertexId> find_key(const Word &key) const;

private:
  friend class BallBuilder;

  BallKind kind_ = BallKind::Cayley;
  std::shared_ptr<const Subgroup> subgroup_;
  int radius_ = 0;
  bool complete_ = false;
  int gens_ = 0;
  std::vector<Word> keys_;
  std::vector<Word> reps_;
  std::vector<int> distance_;
  std::vector<char> frontier_;
  std::vector<Edge> edges_;
  std::vector<EdgeId> out_;
  std::vector<EdgeId> in_;
  std::unordered_map<std::string, VertexId> by_coset_;
};

using BallPtr = std::shared_ptr<const Ball>;

/// Ball of radius R in the Cayley graph for the standard generators.
BallPtr cayley_ball(const GroupModel &m, int radius,
                    std::size_t vertex_budget = kDefaultVertexBudget);

/// Ball of radius R around H*1 in the Schreier coset graph of H.
BallPtr schreier_ball(const GroupModel &m, const SubgroupSpec &h, int radius,
                      std::size_t vertex_budget = kDefaultVertexBudget);
BallPtr schreier_ball(std::shared_ptr<const Subgroup> h, int radius,
                      std::size_t vertex_budget = kDefaultVertexBudget);

} // namespace fends
