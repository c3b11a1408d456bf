#include "fends/ball.hpp"

#include <utility>

#include "fends/error.hpp"

namespace fends {

std::optional<VertexId> Ball::locate(const Word &w) const {
  const auto it = by_coset_.find(subgroup_->coset_key(w));
  if (it == by_coset_.end())
    return std::nullopt;
  return it->second;
}

std::optional<VertexId> Ball::find_key(const Word &key) const {
  const auto v = locate(key);
  if (v && keys_[*v] == key)
    return v;
  return std::nullopt;
}

class BallBuilder {
public:
  static BallPtr build(BallKind kind, std::shared_ptr<const Subgroup> h, int radius,
                       std::size_t budget) {
    if (radius < 0)
      throw InvalidArgument("ball radius must be non-negative");
    auto ball = std::make_shared<Ball>();
    Ball &b = *ball;
    b.kind_ = kind;
    b.subgroup_ = std::move(h);
    b.radius_ = radius;
    const int gens = b.subgroup_->model().generator_count();
    b.gens_ = gens;

    auto add_vertex = [&](const Word &rep, const std::string &coset, int dist) {
      if (b.keys_.size() >= budget)
        throw BudgetExceeded("ball exceeds the vertex budget of " + std::to_string(budget) +
                             " vertices at radius " + std::to_string(dist));
      const auto id = static_cast<VertexId>(b.keys_.size());
      b.keys_.push_back(kind == BallKind::Cayley ? normal_form(b.model(), rep) : rep);
      b.reps_.push_back(rep);
      b.distance_.push_back(dist);
      b.frontier_.push_back(0);
      b.out_.resize(b.out_.size() + static_cast<std::size_t>(gens), kNoId);
      b.in_.resize(b.in_.size() + static_cast<std::size_t>(gens), kNoId);
      b.by_coset_.emplace(coset, id);
      return id;
    };
    auto link = [&](VertexId from, VertexId to, int g) {
      EdgeId &slot = b.out_[static_cast<std::size_t>(from) * gens + g];
      if (slot != kNoId) {
        if (b.edges_[slot].target != to)
          throw InconsistentBalls("coset oracle gave two targets for one edge");
        return;
      }
      slot = static_cast<EdgeId>(b.edges_.size());
      b.in_[static_cast<std::size_t>(to) * gens + g] = slot;
      b.edges_.push_back(Edge{from, to, static_cast<std::uint16_t>(g)});
    };

    add_vertex(Word{}, b.subgroup_->coset_key(Word{}), 0);
    // Layers are scanned in discovery order and letters in shortlex order, so
    // each coset is first reached by its shortlex-least geodesic word.
    for (std::size_t head = 0; head < b.keys_.size(); ++head) {
      const auto v = static_cast<VertexId>(head);
      const int d = b.distance_[v];
      for (int code = 0; code < 2 * gens; ++code) {
        const Letter l = Letter::from_code(code);
        const Word w = b.reps_[v] * l;
        const std::string coset = b.subgroup_->coset_key(w);
        const auto it = b.by_coset_.find(coset);
        VertexId u = kNoId;
        if (it != b.by_coset_.end())
          u = it->second;
        else if (d < radius)
          u = add_vertex(w, coset, d + 1);
        if (u == kNoId) {
          b.frontier_[v] = 1;
          continue;
        }
        if (l.sign > 0)
          link(v, u, l.generator);
        else
          link(u, v, l.generator);
      }
    }
    b.complete_ = true;
    for (char f : b.frontier_)
      if (f)
        b.complete_ = false;
    return ball;
  }
};

BallPtr cayley_ball(const GroupModel &m, int radius, std::size_t vertex_budget) {
  return BallBuilder::build(BallKind::Cayley,
                            std::make_shared<const Subgroup>(m, SubgroupSpec::trivial()),
                            radius, vertex_budget);
}

BallPtr schreier_ball(const GroupModel &m, const SubgroupSpec &h, int radius,
                      std::size_t vertex_budget) {
  return schreier_ball(std::make_shared<const Subgroup>(m, h), radius, vertex_budget);
}

BallPtr schreier_ball(std::shared_ptr<const Subgroup> h, int radius, std::size_t vertex_budget) {
  return BallBuilder::build(BallKind::Schreier, std::move(h), radius, vertex_budget);
}

} // namespace fends
