#include "fends/group_model.hpp"

#include <cctype>

#include "fends/error.hpp"

namespace fends {

namespace {

constexpr int kMaxGenerators = 26;

void check_rank(int rank) {
  if (rank < 1)
    throw InvalidModel("group rank must be at least 1");
  if (rank > kMaxGenerators)
    throw InvalidModel("at most 26 generators are supported");
}

} // namespace

GroupModel GroupModel::free_group(int rank) {
  check_rank(rank);
  GroupModel m;
  m.family_ = Family::Free;
  m.generators_ = rank;
  m.factors_ = {Factor{Family::Free, rank, 0}};
  return m;
}

GroupModel GroupModel::free_abelian(int rank) {
  check_rank(rank);
  GroupModel m;
  m.family_ = Family::FreeAbelian;
  m.generators_ = rank;
  m.factors_ = {Factor{Family::FreeAbelian, rank, 0}};
  m.xyz_names_ = rank <= 3;
  return m;
}

GroupModel GroupModel::direct_product(std::vector<GroupModel> factors) {
  if (factors.size() < 2)
    throw InvalidModel("a direct product needs at least two factors");
  GroupModel m;
  m.family_ = Family::Product;
  for (const GroupModel &f : factors) {
    for (Factor part : f.factors_) {
      part.offset = m.generators_;
      m.generators_ += part.rank;
      m.factors_.push_back(part);
    }
  }
  if (m.generators_ > kMaxGenerators)
    throw InvalidModel("at most 26 generators are supported");
  return m;
}

int GroupModel::factor_of(int generator) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Factor &f = factors_[i];
    if (generator >= f.offset && generator < f.offset + f.rank)
      return static_cast<int>(i);
  }
  throw InvalidWord("generator index " + std::to_string(generator) +
                    " outside alphabet");
}

char GroupModel::generator_name(int generator) const {
  if (xyz_names_)
    return static_cast<char>('x' + generator);
  return static_cast<char>('a' + generator);
}

Word GroupModel::parse(std::string_view text) const {
  std::vector<Letter> raw;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '1')
      continue;
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw InvalidWord("unexpected character '" + std::string(1, c) +
                        "' in word \"" + std::string(text) + "\"");
    const bool inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int index = lower - 'a';
    if (xyz_names_ && lower >= 'x')
      index = lower - 'x';
    if (index < 0 || index >= generators_)
      throw InvalidWord("letter '" + std::string(1, c) + "' is not a generator of " +
                        describe());
    raw.push_back(Letter{static_cast<std::uint16_t>(index),
                         static_cast<std::int8_t>(inverse ? -1 : 1)});
  }
  return Word(raw);
}

std::string GroupModel::format(const Word &w) const {
  if (w.empty())
    return "";
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty())
      out += ' ';
    const char c = generator_name(l.generator);
    out += l.sign > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string GroupModel::describe() const {
  std::string out;
  for (const Factor &f : factors_) {
    if (!out.empty())
      out += " x ";
    if (f.family == Family::Free)
      out += "F" + std::to_string(f.rank);
    else
      out += f.rank == 1 ? "Z" : "Z^" + std::to_string(f.rank);
  }
  return out;
}

void GroupModel::validate(const Word &w) const {
  for (Letter l : w.letters())
    if (l.generator >= generators_)
      throw InvalidWord("letter with generator index " +
                        std::to_string(l.generator) + " outside " + describe());
}

Word factor_part(const GroupModel &m, int factor, const Word &w) {
  const Factor &f = m.factors().at(static_cast<std::size_t>(factor));
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    if (l.generator >= f.offset && l.generator < f.offset + f.rank)
      raw.push_back(Letter{static_cast<std::uint16_t>(l.generator - f.offset), l.sign});
  }
  return Word(raw);
}

std::vector<long long> exponent_vector(const Word &local, int rank) {
  std::vector<long long> v(static_cast<std::size_t>(rank), 0);
  for (Letter l : local.letters())
    v.at(l.generator) += l.sign;
  return v;
}

namespace {

Word abelian_normal_form(const std::vector<long long> &exponents, int offset) {
  std::vector<Letter> raw;
  for (std::size_t g = 0; g < exponents.size(); ++g) {
    const long long e = exponents[g];
    const Letter l{static_cast<std::uint16_t>(offset + static_cast<int>(g)),
                   static_cast<std::int8_t>(e < 0 ? -1 : 1)};
    for (long long i = 0; i < (e < 0 ? -e : e); ++i)
      raw.push_back(l);
  }
  return Word(raw);
}

} // namespace

Word normal_form(const GroupModel &m, const Word &w) {
  m.validate(w);
  if (m.family() == Family::Free)
    return w;
  Word out;
  for (std::size_t i = 0; i < m.factors().size(); ++i) {
    const Factor &f = m.factors()[i];
    const Word local = factor_part(m, static_cast<int>(i), w);
    if (f.family == Family::FreeAbelian) {
      out = out * abelian_normal_form(exponent_vector(local, f.rank), f.offset);
    } else {
      for (Letter l : local.letters())
        out.push_back(Letter{static_cast<std::uint16_t>(l.generator + f.offset), l.sign});
    }
  }
  return out;
}

} // namespace fends
