#include "fends/subgroup.hpp"

#include <utility>

#include "fends/error.hpp"

namespace fends {

IndexClass IndexClass::finite(std::uint64_t n) {
  if (n < 1)
    throw InvalidArgument("finite index must be positive");
  IndexClass c;
  c.value_ = n;
  return c;
}

namespace {

std::vector<Word> localize(const GroupModel &m, int factor, const std::vector<Word> &words) {
  std::vector<Word> out;
  out.reserve(words.size());
  for (const Word &w : words)
    out.push_back(factor_part(m, factor, w));
  return out;
}

IntVector to_int_vector(const std::vector<long long> &v) {
  return IntVector(v.begin(), v.end());
}

std::string encode_letters(const Word &w, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < w.size(); ++i)
    out += static_cast<char>(w[i].code() + 1);
  return out;
}

} // namespace

Subgroup::Subgroup(GroupModel model, SubgroupSpec spec)
    : model_(std::move(model)), spec_(std::move(spec)) {
  const auto &factors = model_.factors();
  per_factor_.assign(factors.size(), {});

  for (const Word &w : spec_.generators) {
    model_.validate(w);
    if (w.empty())
      continue;
    const int f = model_.factor_of(w[0].generator);
    for (Letter l : w.letters())
      if (model_.factor_of(l.generator) != f)
        throw UnsupportedSubgroup("generator \"" + model_.format(w) +
                                  "\" mixes direct factors; only product-form "
                                  "subgroups of direct products are supported");
    per_factor_[static_cast<std::size_t>(f)].push_back(w);
  }
  if (spec_.factor_generators) {
    if (spec_.factor_generators->size() != factors.size())
      throw UnsupportedSubgroup("product-form subgroup needs one generator list per factor");
    for (std::size_t f = 0; f < factors.size(); ++f)
      for (const Word &w : (*spec_.factor_generators)[f]) {
        model_.validate(w);
        for (Letter l : w.letters())
          if (model_.factor_of(l.generator) != static_cast<int>(f))
            throw UnsupportedSubgroup("generator \"" + model_.format(w) +
                                      "\" uses letters outside factor " +
                                      std::to_string(f));
        per_factor_[f].push_back(w);
      }
  }

  for (std::size_t f = 0; f < factors.size(); ++f) {
    const std::vector<Word> local = localize(model_, static_cast<int>(f), per_factor_[f]);
    if (factors[f].family == Family::Free) {
      oracles_.emplace_back(FoldedAutomaton(factors[f].rank, local));
    } else {
      std::vector<IntVector> rows;
      for (const Word &w : local)
        rows.push_back(to_int_vector(exponent_vector(w, factors[f].rank)));
      oracles_.emplace_back(IntegerLattice(factors[f].rank, std::move(rows)));
    }
  }
}

bool Subgroup::is_trivial() const {
  for (const Oracle &o : oracles_) {
    if (const auto *a = std::get_if<FoldedAutomaton>(&o)) {
      if (a->state_count() != 1 || a->basis_rank() != 0)
        return false;
    } else if (std::get<IntegerLattice>(o).rank() != 0) {
      return false;
    }
  }
  return true;
}

bool Subgroup::contains(const Word &w) const {
  model_.validate(w);
  for (std::size_t f = 0; f < oracles_.size(); ++f) {
    const Word local = factor_part(model_, static_cast<int>(f), w);
    if (const auto *a = std::get_if<FoldedAutomaton>(&oracles_[f])) {
      if (!a->accepts(local))
        return false;
    } else {
      const auto &lattice = std::get<IntegerLattice>(oracles_[f]);
      if (!lattice.contains(to_int_vector(exponent_vector(local, lattice.dimension()))))
        return false;
    }
  }
  return true;
}

std::string Subgroup::coset_key(const Word &w) const {
  model_.validate(w);
  std::string key;
  for (std::size_t f = 0; f < oracles_.size(); ++f) {
    if (f > 0)
      key += '#';
    const Word local = factor_part(model_, static_cast<int>(f), w);
    if (const auto *a = std::get_if<FoldedAutomaton>(&oracles_[f])) {
      // A right coset H w is a vertex of the Schreier graph: the state
      // reached by the longest readable prefix, then the unread suffix
      // hanging off the folded core.
      const auto t = a->trace(local);
      key += std::to_string(t.state);
      key += '|';
      key += encode_letters(local, t.consumed);
    } else {
      const auto &lattice = std::get<IntegerLattice>(oracles_[f]);
      for (std::int64_t x : lattice.reduce(to_int_vector(exponent_vector(local, lattice.dimension())))) {
        key += std::to_string(x);
        key += ',';
      }
    }
  }
  return key;
}

IndexClass Subgroup::index() const {
  std::uint64_t total = 1;
  for (const Oracle &o : oracles_) {
    std::uint64_t n = 0;
    if (const auto *a = std::get_if<FoldedAutomaton>(&o)) {
      if (!a->complete())
        return IndexClass::infinite();
      n = static_cast<std::uint64_t>(a->state_count());
    } else {
      const auto idx = std::get<IntegerLattice>(o).index();
      if (!idx)
        return IndexClass::infinite();
      n = *idx;
    }
    if (__builtin_mul_overflow(total, n, &total))
      throw ArithmeticOverflow("subgroup index overflows 64 bits");
  }
  return IndexClass::finite(total);
}

bool Subgroup::contains_subgroup(const Subgroup &other) const {
  if (!(other.model_ == model_))
    return false;
  for (const auto &list : other.per_factor_)
    for (const Word &w : list)
      if (!contains(w))
        return false;
  return true;
}

IndexClass Subgroup::index_of(const Subgroup &smaller) const {
  if (!contains_subgroup(smaller))
    throw ChainViolation("subgroup is not contained in the larger subgroup");
  std::uint64_t total = 1;
  for (std::size_t f = 0; f < oracles_.size(); ++f) {
    const std::vector<Word> local =
        localize(model_, static_cast<int>(f), smaller.per_factor_[f]);
    std::uint64_t n = 0;
    if (const auto *a = std::get_if<FoldedAutomaton>(&oracles_[f])) {
      if (a->basis_rank() == 0) {
        n = 1; // trivial H forces trivial K
      } else {
        // Rewrite K's generators in H's free basis and fold them there.
        std::vector<Word> rewritten;
        for (const Word &w : local)
          rewritten.push_back(a->rewrite(w));
        const FoldedAutomaton inner(a->basis_rank(), rewritten);
        if (!inner.complete())
          return IndexClass::infinite();
        n = static_cast<std::uint64_t>(inner.state_count());
      }
    } else {
      const auto &big = std::get<IntegerLattice>(oracles_[f]);
      const auto &small = std::get<IntegerLattice>(smaller.oracles_[f]);
      if (small.rank() < big.rank())
        return IndexClass::infinite();
      if (big.rank() == 0) {
        n = 1;
      } else {
        std::vector<IntVector> coords;
        for (const IntVector &row : small.basis())
          coords.push_back(*big.coordinates(row));
        const IntegerLattice sub(big.rank(), std::move(coords));
        n = *sub.index();
      }
    }
    if (__builtin_mul_overflow(total, n, &total))
      throw ArithmeticOverflow("subgroup index overflows 64 bits");
  }
  return IndexClass::finite(total);
}

bool is_member(const GroupModel &m, const SubgroupSpec &s, const Word &w) {
  return Subgroup(m, s).contains(w);
}

IndexClass subgroup_index(const GroupModel &m, const SubgroupSpec &s) {
  return Subgroup(m, s).index();
}

IndexClass relative_index(const GroupModel &m, const SubgroupSpec &h, const SubgroupSpec &k) {
  return Subgroup(m, h).index_of(Subgroup(m, k));
}

} // namespace fends
