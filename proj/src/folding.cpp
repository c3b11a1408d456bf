#include "fends/folding.hpp"

#include <deque>
#include <utility>

#include "fends/error.hpp"

namespace fends {

namespace {

// Union-find over states with one outgoing slot per letter; merges queued
// while two slots collide.
class Folder {
public:
  explicit Folder(int rank) : letters_(2 * rank) {}

  int add_state() {
    parent_.push_back(static_cast<int>(parent_.size()));
    out_.emplace_back(static_cast<std::size_t>(letters_), FoldedAutomaton::kNone);
    return static_cast<int>(parent_.size()) - 1;
  }

  int find(int s) {
    while (parent_[s] != s) {
      parent_[s] = parent_[parent_[s]];
      s = parent_[s];
    }
    return s;
  }

  void link(int s, int code, int t) {
    s = find(s);
    t = find(t);
    set_out(s, code, t);
    set_out(t, code ^ 1, s);
    drain();
  }

  // Slot table of representative states, indexed [state][code].
  int out(int s, int code) {
    const int t = out_[s][code];
    return t == FoldedAutomaton::kNone ? t : find(t);
  }

  std::size_t size() const { return parent_.size(); }

private:
  void set_out(int s, int code, int t) {
    int &slot = out_[s][code];
    if (slot == FoldedAutomaton::kNone)
      slot = t;
    else if (find(slot) != find(t))
      pending_.emplace_back(slot, t);
  }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b)
        continue;
      if (b == 0)
        std::swap(a, b); // keep the base as a representative
      parent_[b] = a;
      for (int code = 0; code < letters_; ++code) {
        const int t = out_[b][code];
        if (t != FoldedAutomaton::kNone)
          set_out(a, code, find(t));
      }
      out_[b].assign(static_cast<std::size_t>(letters_), FoldedAutomaton::kNone);
    }
  }

  int letters_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> out_;
  std::deque<std::pair<int, int>> pending_;
};

} // namespace

FoldedAutomaton::FoldedAutomaton(int rank, std::span<const Word> generators)
    : rank_(rank) {
  if (rank < 1)
    throw InvalidArgument("folded automaton needs a rank >= 1 alphabet");
  Folder folder(rank);
  folder.add_state();
  for (const Word &w : generators) {
    if (w.empty())
      continue;
    int current = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].generator >= rank)
        throw InvalidWord("generator word outside the free alphabet");
      const int next = i + 1 == w.size() ? 0 : folder.add_state();
      folder.link(current, w[i].code(), next);
      current = next;
    }
  }

  // Renumber surviving states breadth-first from the base in letter order;
  // the BFS tree edges double as the spanning tree for the basis.
  const int letters = 2 * rank;
  std::vector<int> number(folder.size(), kNone);
  std::vector<int> order{folder.find(0)};
  number[order[0]] = 0;
  std::vector<std::pair<int, int>> tree_edge; // (state, generator) of positive tree edges
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int s = order[head];
    for (int code = 0; code < letters; ++code) {
      const int t = folder.out(s, code);
      if (t == kNone || number[t] != kNone)
        continue;
      number[t] = static_cast<int>(order.size());
      order.push_back(t);
      const Letter l = Letter::from_code(code);
      tree_edge.emplace_back(l.sign > 0 ? s : t, l.generator);
    }
  }
  states_ = static_cast<int>(order.size());
  table_.assign(static_cast<std::size_t>(states_) * letters, kNone);
  for (int i = 0; i < states_; ++i)
    for (int code = 0; code < letters; ++code) {
      const int t = folder.out(order[i], code);
      table_[static_cast<std::size_t>(i) * letters + code] = t == kNone ? kNone : number[t];
    }

  std::vector<char> is_tree(static_cast<std::size_t>(states_) * rank, 0);
  for (auto [s, g] : tree_edge)
    is_tree[static_cast<std::size_t>(number[s]) * rank + g] = 1;
  edge_basis_.assign(static_cast<std::size_t>(states_) * rank, kNone);
  for (int s = 0; s < states_; ++s)
    for (int g = 0; g < rank; ++g) {
      const std::size_t slot = static_cast<std::size_t>(s) * rank + g;
      if (table_[static_cast<std::size_t>(s) * letters + 2 * g] != kNone && !is_tree[slot])
        edge_basis_[slot] = basis_rank_++;
    }
}

FoldedAutomaton::Trace FoldedAutomaton::trace(const Word &w) const {
  Trace t;
  for (Letter l : w.letters()) {
    if (l.generator >= rank_)
      break;
    const int next = step(t.state, l);
    if (next == kNone)
      break;
    t.state = next;
    ++t.consumed;
  }
  return t;
}

bool FoldedAutomaton::accepts(const Word &w) const {
  const Trace t = trace(w);
  return t.consumed == w.size() && t.state == base();
}

bool FoldedAutomaton::complete() const {
  for (int x : table_)
    if (x == kNone)
      return false;
  return true;
}

Word FoldedAutomaton::rewrite(const Word &w) const {
  if (!accepts(w))
    throw InvalidArgument("word " + w.str() + " is not in the subgroup");
  Word out;
  int state = base();
  for (Letter l : w.letters()) {
    const int next = step(state, l);
    const int tail = l.sign > 0 ? state : next;
    const int index = edge_basis_[static_cast<std::size_t>(tail) * rank_ + l.generator];
    if (index != kNone)
      out.push_back(Letter{static_cast<std::uint16_t>(index), l.sign});
    state = next;
  }
  return out;
}

} // namespace fends
