#include "palinwidth/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "palinwidth/errors.hpp"

namespace palinwidth {

namespace {

BigInt floor_mod(const BigInt& x, const BigInt& d) {
  BigInt r = x % d;
  if (r < 0) r += d;
  return r;
}

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::vector<int> free_reduce_concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  for (int l : b) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::vector<int> free_inverse(const std::vector<int>& a) {
  std::vector<int> out(a.rbegin(), a.rend());
  for (int& l : out) l = -l;
  return out;
}

std::vector<int> free_power_of_letter(int letter, const BigInt& k) {
  std::vector<int> out;
  if (k == 0 || letter == 0) return out;
  const int l = k > 0 ? letter : -letter;
  const auto count = static_cast<std::size_t>(big_abs(k));
  out.assign(count, l);
  return out;
}

// Signed exponent of the maximal leading (or trailing) run of +-letter.
BigInt leading_run(const std::vector<int>& w, int letter) {
  BigInt s = 0;
  for (int l : w) {
    if (l == letter) {
      ++s;
    } else if (l == -letter) {
      --s;
    } else {
      break;
    }
  }
  return s;
}

BigInt trailing_run(const std::vector<int>& w, int letter) {
  BigInt s = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == letter) {
      ++s;
    } else if (*it == -letter) {
      --s;
    } else {
      break;
    }
  }
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() &&
           !(std::isspace(static_cast<unsigned char>(text[j])) || text[j] == '*')) {
      ++j;
    }
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

BigInt parse_exponent(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw UsageError("missing exponent");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw UsageError("bad exponent '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// Spec constructors

GroupSpec GroupSpec::integer(std::string generator) {
  GroupSpec s;
  s.kind = GroupKind::Integer;
  s.generators = {std::move(generator)};
  return s;
}

GroupSpec GroupSpec::cyclic(std::int64_t n, std::string generator) {
  GroupSpec s;
  s.kind = GroupKind::Cyclic;
  s.modulus = n;
  s.generators = {std::move(generator)};
  return s;
}

GroupSpec GroupSpec::finite_table(std::vector<std::vector<std::size_t>> table,
                                  std::vector<std::string> names,
                                  std::vector<std::string> generators) {
  GroupSpec s;
  s.kind = GroupKind::FiniteTable;
  s.table = std::move(table);
  s.names = std::move(names);
  s.generators = std::move(generators);
  return s;
}

GroupSpec GroupSpec::free(std::size_t rank, std::vector<std::string> generators) {
  GroupSpec s;
  s.kind = GroupKind::Free;
  s.rank = rank;
  s.generators = std::move(generators);
  return s;
}

SubgroupSpec SubgroupSpec::index(BigInt m) {
  SubgroupSpec s;
  s.kind = Kind::Index;
  s.modulus = std::move(m);
  return s;
}

SubgroupSpec SubgroupSpec::element_list(std::vector<Element> elements) {
  SubgroupSpec s;
  s.kind = Kind::Elements;
  s.elements = std::move(elements);
  return s;
}

SubgroupSpec SubgroupSpec::trivial() { return SubgroupSpec{}; }

SubgroupSpec SubgroupSpec::cyclic_generated(Element generator) {
  SubgroupSpec s;
  s.kind = Kind::CyclicGenerated;
  s.generator = std::move(generator);
  return s;
}

IsoSpec IsoSpec::index_pair(BigInt m, BigInt n) {
  IsoSpec s;
  s.kind = Kind::IndexPair;
  s.source_modulus = std::move(m);
  s.target_modulus = std::move(n);
  return s;
}

IsoSpec IsoSpec::from_pairs(std::vector<std::pair<Element, Element>> pairs) {
  IsoSpec s;
  s.kind = Kind::Pairs;
  s.pairs = std::move(pairs);
  return s;
}

// ---------------------------------------------------------------------------
// Isomorphism

Isomorphism::Isomorphism(IsoSpec spec) : spec_(std::move(spec)) {
  if (spec_.kind == IsoSpec::Kind::IndexPair) {
    if (spec_.source_modulus <= 0 || spec_.target_modulus <= 0) {
      throw UsageError("index_pair moduli must be positive");
    }
    return;
  }
  for (const auto& [a, b] : spec_.pairs) {
    if (!forward_.emplace(a, b).second) throw UsageError("iso pairs repeat a source element");
    if (!backward_.emplace(b, a).second) throw UsageError("iso pairs repeat a target element");
  }
}

bool Isomorphism::in_domain(Direction direction, const Element& g) const {
  if (spec_.kind == IsoSpec::Kind::IndexPair) {
    if (g.is_word()) return false;
    const BigInt& m = direction == Direction::Forward ? spec_.source_modulus : spec_.target_modulus;
    return g.value() % m == 0;
  }
  const auto& map = direction == Direction::Forward ? forward_ : backward_;
  return map.count(g) != 0;
}

Element Isomorphism::apply(Direction direction, const Element& g) const {
  if (spec_.kind == IsoSpec::Kind::IndexPair) {
    const bool fwd = direction == Direction::Forward;
    const BigInt& from = fwd ? spec_.source_modulus : spec_.target_modulus;
    const BigInt& to = fwd ? spec_.target_modulus : spec_.source_modulus;
    if (g.is_word() || g.value() % from != 0) {
      throw DomainError("element outside the source subgroup of the isomorphism");
    }
    return Element::scalar(g.value() / from * to);
  }
  const auto& map = direction == Direction::Forward ? forward_ : backward_;
  auto it = map.find(g);
  if (it == map.end()) throw DomainError("element outside the source subgroup of the isomorphism");
  return it->second;
}

// ---------------------------------------------------------------------------
// Group construction

Group::Group(GroupSpec spec) : spec_(std::move(spec)) {
  for (const auto& g : spec_.generators) {
    if (!is_identifier(g)) throw UsageError("generator name '" + g + "' is not an identifier");
  }
  switch (spec_.kind) {
    case GroupKind::Integer:
      if (spec_.generators.empty()) spec_.generators = {"a"};
      if (spec_.generators.size() != 1) throw UsageError("integer group takes one generator");
      break;
    case GroupKind::Cyclic:
      if (spec_.modulus < 1) throw UsageError("cyclic group order must be >= 1");
      if (spec_.generators.empty()) spec_.generators = {"x"};
      if (spec_.generators.size() != 1) throw UsageError("cyclic group takes one generator");
      break;
    case GroupKind::Free:
      if (spec_.rank < 1) throw UsageError("free group rank must be >= 1");
      if (spec_.generators.empty()) {
        for (std::size_t i = 0; i < spec_.rank; ++i) {
          spec_.generators.push_back("x" + std::to_string(i + 1));
        }
      }
      if (spec_.generators.size() != spec_.rank) {
        throw UsageError("free group needs exactly one name per generator");
      }
      break;
    case GroupKind::FiniteTable: {
      const std::size_t n = spec_.table.size();
      if (n == 0) throw UsageError("finite table is empty");
      if (spec_.names.size() != n) throw UsageError("finite table needs one name per element");
      std::set<std::string> seen;
      for (const auto& name : spec_.names) {
        if (!is_identifier(name)) throw UsageError("element name '" + name + "' is not an identifier");
        if (!seen.insert(name).second) throw UsageError("duplicate element name '" + name + "'");
      }
      for (const auto& row : spec_.table) {
        if (row.size() != n) throw UsageError("finite table is not square");
        for (std::size_t v : row) {
          if (v >= n) throw UsageError("finite table entry out of range");
        }
      }
      std::optional<std::size_t> e;
      for (std::size_t i = 0; i < n && !e; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
          ok = spec_.table[i][j] == j && spec_.table[j][i] == j;
        }
        if (ok) e = i;
      }
      if (!e) throw UsageError("finite table has no identity");
      identity_index_ = *e;
      inverse_.assign(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (spec_.table[i][j] == identity_index_ && spec_.table[j][i] == identity_index_) {
            inverse_[i] = j;
            break;
          }
        }
        if (inverse_[i] == n) throw UsageError("element '" + spec_.names[i] + "' has no inverse");
      }
      // Full associativity check for small tables, a deterministic sample
      // of triples otherwise.
      const auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
        return spec_.table[spec_.table[a][b]][c] == spec_.table[a][spec_.table[b][c]];
      };
      if (n <= 64) {
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
              if (!assoc(a, b, c)) throw UsageError("finite table is not associative");
      } else {
        std::uint64_t state = 0x9e3779b97f4a7c15ULL;
        for (int trial = 0; trial < 200000; ++trial) {
          state = state * 6364136223846793005ULL + 1442695040888963407ULL;
          const std::size_t a = (state >> 33) % n;
          const std::size_t b = (state >> 17) % n;
          const std::size_t c = (state >> 5) % n;
          if (!assoc(a, b, c)) throw UsageError("finite table is not associative");
        }
      }
      if (spec_.generators.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
          if (i != identity_index_) spec_.generators.push_back(spec_.names[i]);
        }
      }
      for (const auto& g : spec_.generators) {
        if (std::find(spec_.names.begin(), spec_.names.end(), g) == spec_.names.end()) {
          throw UsageError("generator '" + g + "' is not an element name");
        }
      }
      break;
    }
  }
}

bool Group::is_abelian() const {
  switch (spec_.kind) {
    case GroupKind::Integer:
    case GroupKind::Cyclic:
      return true;
    case GroupKind::Free:
      return spec_.rank == 1;
    case GroupKind::FiniteTable:
      for (std::size_t i = 0; i < spec_.table.size(); ++i)
        for (std::size_t j = i + 1; j < spec_.table.size(); ++j)
          if (spec_.table[i][j] != spec_.table[j][i]) return false;
      return true;
  }
  return false;
}

std::optional<std::size_t> Group::order() const {
  if (spec_.kind == GroupKind::Cyclic) return static_cast<std::size_t>(spec_.modulus);
  if (spec_.kind == GroupKind::FiniteTable) return spec_.table.size();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Arithmetic

Element Group::identity() const {
  switch (spec_.kind) {
    case GroupKind::Free:
      return Element::word({});
    case GroupKind::FiniteTable:
      return Element::scalar(identity_index_);
    default:
      return Element::scalar(0);
  }
}

void Group::check(const Element& g) const {
  const bool want_word = spec_.kind == GroupKind::Free;
  if (g.is_word() != want_word) throw UsageError("element belongs to a different group");
  switch (spec_.kind) {
    case GroupKind::Integer:
      return;
    case GroupKind::Cyclic:
      if (g.value() < 0 || g.value() >= spec_.modulus) {
        throw UsageError("element belongs to a different group");
      }
      return;
    case GroupKind::FiniteTable:
      if (g.value() < 0 || g.value() >= spec_.table.size()) {
        throw UsageError("element belongs to a different group");
      }
      return;
    case GroupKind::Free: {
      const auto& w = g.letters();
      for (std::size_t i = 0; i < w.size(); ++i) {
        const int l = w[i];
        if (l == 0 || static_cast<std::size_t>(std::abs(l)) > spec_.rank) {
          throw UsageError("element belongs to a different group");
        }
        if (i > 0 && w[i - 1] == -l) throw UsageError("free group element is not reduced");
      }
      return;
    }
  }
}

std::size_t Group::index_of(const Element& g) const { return static_cast<std::size_t>(g.value()); }

Element Group::multiply(const Element& g, const Element& h) const {
  const bool want_word = spec_.kind == GroupKind::Free;
  if (g.is_word() != want_word || h.is_word() != want_word) {
    throw UsageError("element belongs to a different group");
  }
  switch (spec_.kind) {
    case GroupKind::Integer:
      return Element::scalar(g.value() + h.value());
    case GroupKind::Cyclic: {
      check(g);
      check(h);
      BigInt v = g.value() + h.value();
      if (v >= spec_.modulus) v -= spec_.modulus;
      return Element::scalar(std::move(v));
    }
    case GroupKind::FiniteTable:
      check(g);
      check(h);
      return Element::scalar(spec_.table[index_of(g)][index_of(h)]);
    case GroupKind::Free:
      return Element::word(free_reduce_concat(g.letters(), h.letters()));
  }
  return identity();
}

Element Group::invert(const Element& g) const {
  switch (spec_.kind) {
    case GroupKind::Integer:
      if (g.is_word()) throw UsageError("element belongs to a different group");
      return Element::scalar(-g.value());
    case GroupKind::Cyclic:
      check(g);
      return Element::scalar(g.value() == 0 ? BigInt(0) : BigInt(spec_.modulus - g.value()));
    case GroupKind::FiniteTable:
      check(g);
      return Element::scalar(inverse_[index_of(g)]);
    case GroupKind::Free:
      if (!g.is_word()) throw UsageError("element belongs to a different group");
      return Element::word(free_inverse(g.letters()));
  }
  return identity();
}

bool Group::is_identity(const Element& g) const { return equals(g, identity()); }

bool Group::equals(const Element& g, const Element& h) const {
  check(g);
  check(h);
  return g == h;
}

Element Group::power(const Element& g, const BigInt& k) const {
  switch (spec_.kind) {
    case GroupKind::Integer:
      return Element::scalar(g.value() * k);
    case GroupKind::Cyclic:
      check(g);
      return Element::scalar(floor_mod(g.value() * k, spec_.modulus));
    case GroupKind::FiniteTable: {
      check(g);
      BigInt e = floor_mod(k, spec_.table.size());
      Element result = identity();
      Element base = g;
      while (e > 0) {
        if ((e & 1) != 0) result = multiply(result, base);
        base = multiply(base, base);
        e >>= 1;
      }
      return result;
    }
    case GroupKind::Free: {
      check(g);
      const Element base = k < 0 ? invert(g) : g;
      Element result = identity();
      for (BigInt i = 0; i < big_abs(k); ++i) result = multiply(result, base);
      return result;
    }
  }
  return identity();
}

Element Group::generator(std::size_t i) const {
  if (i >= spec_.generators.size()) throw UsageError("generator index out of range");
  switch (spec_.kind) {
    case GroupKind::Integer:
      return Element::scalar(1);
    case GroupKind::Cyclic:
      return Element::scalar(spec_.modulus == 1 ? 0 : 1);
    case GroupKind::FiniteTable: {
      const auto it = std::find(spec_.names.begin(), spec_.names.end(), spec_.generators[i]);
      return Element::scalar(static_cast<std::size_t>(it - spec_.names.begin()));
    }
    case GroupKind::Free:
      return Element::word({static_cast<int>(i + 1)});
  }
  return identity();
}

Element Group::generator_power(std::size_t i, const BigInt& k) const {
  if (spec_.kind == GroupKind::Free) {
    if (i >= spec_.rank) throw UsageError("generator index out of range");
    return Element::word(free_power_of_letter(static_cast<int>(i + 1), k));
  }
  return power(generator(i), k);
}

std::optional<Element> Group::letter(std::string_view name) const {
  if (spec_.kind == GroupKind::FiniteTable) {
    for (std::size_t i = 0; i < spec_.names.size(); ++i) {
      if (spec_.names[i] == name) return Element::scalar(i);
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < spec_.generators.size(); ++i) {
    if (spec_.generators[i] == name) return generator(i);
  }
  return std::nullopt;
}

std::vector<std::string> Group::format_tokens(const Element& g) const {
  check(g);
  const auto with_exp = [](const std::string& name, const BigInt& k) {
    return k == 1 ? name : name + "^" + k.str();
  };
  switch (spec_.kind) {
    case GroupKind::Integer:
    case GroupKind::Cyclic:
      if (g.value() == 0) return {};
      return {with_exp(spec_.generators[0], g.value())};
    case GroupKind::FiniteTable:
      if (index_of(g) == identity_index_) return {};
      return {spec_.names[index_of(g)]};
    case GroupKind::Free: {
      std::vector<std::string> out;
      const auto& w = g.letters();
      std::size_t i = 0;
      while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        const BigInt k = static_cast<long long>(j - i) * (w[i] > 0 ? 1 : -1);
        out.push_back(with_exp(spec_.generators[static_cast<std::size_t>(std::abs(w[i]) - 1)], k));
        i = j;
      }
      return out;
    }
  }
  return {};
}

std::string Group::format(const Element& g) const {
  std::string out;
  for (const auto& tok : format_tokens(g)) {
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

Element Group::parse(std::string_view text) const {
  Element result = identity();
  for (auto tok : split_tokens(text)) {
    if (tok == "1") continue;
    const auto caret = tok.find('^');
    const std::string_view name = tok.substr(0, caret);
    const BigInt k = caret == std::string_view::npos ? BigInt(1) : parse_exponent(tok.substr(caret + 1));
    auto base = letter(name);
    if (!base) throw UsageError("unknown letter '" + std::string(name) + "'");
    result = multiply(result, power(*base, k));
  }
  return result;
}

std::vector<Element> Group::alphabet(int bound) const {
  std::vector<Element> out;
  std::set<Element> seen;
  for (std::size_t i = 0; i < spec_.generators.size(); ++i) {
    for (int k = 1; k <= bound; ++k) {
      for (int sign : {1, -1}) {
        Element e = generator_power(i, k * sign);
        if (is_identity(e)) continue;
        if (seen.insert(e).second) out.push_back(std::move(e));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups

std::int64_t Group::scalar_modulus(const SubgroupSpec& sub) const {
  // Integer: H = dZ (d = 0 for the trivial subgroup). Cyclic(n): H = <x^d>, d | n.
  const std::int64_t n = spec_.kind == GroupKind::Cyclic ? spec_.modulus : 0;
  switch (sub.kind) {
    case SubgroupSpec::Kind::Trivial:
      return n;
    case SubgroupSpec::Kind::Index: {
      const auto m = static_cast<std::int64_t>(sub.modulus);
      return n == 0 ? m : gcd64(m, n);
    }
    case SubgroupSpec::Kind::CyclicGenerated: {
      const auto k = static_cast<std::int64_t>(big_abs(sub.generator.value()));
      return n == 0 ? k : gcd64(k, n);
    }
    case SubgroupSpec::Kind::Elements: {
      std::int64_t d = n;
      for (const auto& e : sub.elements) d = gcd64(d, static_cast<std::int64_t>(big_abs(e.value())));
      return d;
    }
  }
  return n;
}

std::pair<int, BigInt> Group::free_cyclic_base(const SubgroupSpec& sub) const {
  switch (sub.kind) {
    case SubgroupSpec::Kind::Trivial:
    case SubgroupSpec::Kind::Elements:
      return {0, 0};
    case SubgroupSpec::Kind::Index:
      return {1, sub.modulus};
    case SubgroupSpec::Kind::CyclicGenerated: {
      const auto& w = sub.generator.letters();
      if (w.empty()) return {0, 0};
      const int letter = std::abs(w.front());
      for (int l : w) {
        if (std::abs(l) != letter) {
          throw UnsupportedCase("free-group subgroups must be generated by a single generator power");
        }
      }
      return {letter, BigInt(static_cast<long long>(w.size())) * (w.front() > 0 ? 1 : -1)};
    }
  }
  return {0, 0};
}

void Group::validate(const SubgroupSpec& sub) const {
  switch (sub.kind) {
    case SubgroupSpec::Kind::Trivial:
      return;
    case SubgroupSpec::Kind::Index:
      if (sub.modulus < 1) throw UsageError("index subgroup modulus must be >= 1");
      if (spec_.kind == GroupKind::FiniteTable) {
        throw UsageError("index subgroups are only defined for integer and cyclic groups");
      }
      if (spec_.kind == GroupKind::Free && spec_.rank != 1) {
        throw UsageError("index subgroups of free groups need rank 1");
      }
      return;
    case SubgroupSpec::Kind::CyclicGenerated:
      check(sub.generator);
      if (spec_.kind == GroupKind::Free) free_cyclic_base(sub);
      return;
    case SubgroupSpec::Kind::Elements: {
      if (sub.elements.empty()) throw UsageError("element_list subgroup is empty");
      for (const auto& e : sub.elements) check(e);
      const std::set<Element> set(sub.elements.begin(), sub.elements.end());
      if (!set.count(identity())) throw UsageError("element_list subgroup lacks the identity");
      for (const auto& x : set) {
        if (!set.count(invert(x))) throw UsageError("element_list subgroup is not closed under inverse");
        for (const auto& y : set) {
          if (!set.count(multiply(x, y))) {
            throw UsageError("element_list subgroup is not closed under product");
          }
        }
      }
      return;
    }
  }
}

bool Group::contains(const SubgroupSpec& sub, const Element& g) const {
  switch (spec_.kind) {
    case GroupKind::Integer:
    case GroupKind::Cyclic: {
      if (g.is_word()) throw UsageError("element belongs to a different group");
      if (sub.kind == SubgroupSpec::Kind::Index && spec_.kind == GroupKind::Integer) {
        return g.value() % sub.modulus == 0;
      }
      const std::int64_t d = scalar_modulus(sub);
      return d == 0 ? g.value() == 0 : g.value() % d == 0;
    }
    case GroupKind::FiniteTable: {
      check(g);
      if (sub.kind == SubgroupSpec::Kind::Trivial) return index_of(g) == identity_index_;
      if (sub.kind == SubgroupSpec::Kind::Elements) {
        return std::find(sub.elements.begin(), sub.elements.end(), g) != sub.elements.end();
      }
      const auto elems = subgroup_elements(sub);
      return std::find(elems->begin(), elems->end(), g) != elems->end();
    }
    case GroupKind::Free: {
      check(g);
      const auto [letter, k] = free_cyclic_base(sub);
      const auto& w = g.letters();
      if (letter == 0) return w.empty();
      const BigInt s = leading_run(w, letter);
      if (big_abs(s) != w.size()) return false;
      return s % k == 0;
    }
  }
  return false;
}

std::optional<BigInt> Group::index(const SubgroupSpec& sub) const {
  switch (spec_.kind) {
    case GroupKind::Integer: {
      const std::int64_t d = scalar_modulus(sub);
      if (d == 0) return std::nullopt;
      return BigInt(d);
    }
    case GroupKind::Cyclic:
      return BigInt(scalar_modulus(sub));
    case GroupKind::FiniteTable:
      return BigInt(spec_.table.size() / subgroup_elements(sub)->size());
    case GroupKind::Free: {
      if (spec_.rank != 1) return std::nullopt;
      const auto [letter, k] = free_cyclic_base(sub);
      if (letter == 0) return std::nullopt;
      return big_abs(k);
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> Group::subgroup_elements(const SubgroupSpec& sub) const {
  switch (spec_.kind) {
    case GroupKind::Integer:
      if (scalar_modulus(sub) != 0) return std::nullopt;
      return std::vector<Element>{identity()};
    case GroupKind::Cyclic: {
      const std::int64_t d = scalar_modulus(sub);
      std::vector<Element> out;
      for (std::int64_t v = 0; v < spec_.modulus; v += d) out.push_back(Element::scalar(v));
      return out;
    }
    case GroupKind::FiniteTable: {
      std::vector<Element> out{identity()};
      if (sub.kind == SubgroupSpec::Kind::Elements) {
        for (const auto& e : sub.elements) {
          if (e != out.front()) out.push_back(e);
        }
      } else if (sub.kind == SubgroupSpec::Kind::CyclicGenerated) {
        Element cur = sub.generator;
        while (!is_identity(cur)) {
          out.push_back(cur);
          cur = multiply(cur, sub.generator);
        }
      }
      return out;
    }
    case GroupKind::Free:
      if (free_cyclic_base(sub).first != 0) return std::nullopt;
      return std::vector<Element>{identity()};
  }
  return std::nullopt;
}

bool Group::is_proper(const SubgroupSpec& sub) const {
  const auto idx = index(sub);
  return !idx || *idx != 1;
}

CosetSplit Group::right_coset_split(const SubgroupSpec& sub, const Element& x) const {
  switch (spec_.kind) {
    case GroupKind::Integer:
    case GroupKind::Cyclic: {
      if (x.is_word()) throw UsageError("element belongs to a different group");
      const std::int64_t d = scalar_modulus(sub);
      if (d == 0) return {identity(), x};
      BigInt rep = floor_mod(x.value(), d);
      BigInt part = x.value() - rep;
      return {Element::scalar(std::move(part)), Element::scalar(std::move(rep))};
    }
    case GroupKind::FiniteTable: {
      check(x);
      const auto elems = subgroup_elements(sub);
      std::size_t best = spec_.table.size();
      for (const auto& h : *elems) best = std::min(best, spec_.table[index_of(h)][index_of(x)]);
      Element rep = Element::scalar(best);
      return {multiply(x, invert(rep)), rep};
    }
    case GroupKind::Free: {
      check(x);
      const auto [letter, k] = free_cyclic_base(sub);
      if (letter == 0) return {identity(), x};
      const BigInt s = leading_run(x.letters(), letter);
      const BigInt keep = floor_mod(s, big_abs(k));
      Element part = Element::word(free_power_of_letter(letter, s - keep));
      return {part, multiply(invert(part), x)};
    }
  }
  return {identity(), x};
}

CosetSplit Group::left_coset_split(const SubgroupSpec& sub, const Element& x) const {
  switch (spec_.kind) {
    case GroupKind::Integer:
    case GroupKind::Cyclic:
      return right_coset_split(sub, x);
    case GroupKind::FiniteTable: {
      check(x);
      const auto elems = subgroup_elements(sub);
      std::size_t best = spec_.table.size();
      for (const auto& h : *elems) best = std::min(best, spec_.table[index_of(x)][index_of(h)]);
      Element rep = Element::scalar(best);
      return {multiply(invert(rep), x), rep};
    }
    case GroupKind::Free: {
      check(x);
      const auto [letter, k] = free_cyclic_base(sub);
      if (letter == 0) return {identity(), x};
      const BigInt s = trailing_run(x.letters(), letter);
      const BigInt keep = floor_mod(s, big_abs(k));
      Element part = Element::word(free_power_of_letter(letter, s - keep));
      return {part, multiply(x, invert(part))};
    }
  }
  return {identity(), x};
}

// ---------------------------------------------------------------------------
// Isomorphism validation

void validate_isomorphism(const Group& from, const SubgroupSpec& source, const Group& to,
                          const SubgroupSpec& target, const IsoSpec& iso) {
  from.validate(source);
  to.validate(target);
  if (iso.kind == IsoSpec::Kind::IndexPair) {
    if (from.kind() != GroupKind::Integer || to.kind() != GroupKind::Integer) {
      throw UsageError("index_pair isomorphisms need integer groups");
    }
    if (from.index(source) != std::optional<BigInt>(iso.source_modulus) ||
        to.index(target) != std::optional<BigInt>(iso.target_modulus)) {
      throw UsageError("index_pair moduli do not match the subgroups");
    }
    return;
  }
  const auto src = from.subgroup_elements(source);
  const auto dst = to.subgroup_elements(target);
  if (!src || !dst) throw UsageError("explicit isomorphism tables need finite subgroups");
  const Isomorphism phi(iso);
  const std::set<Element> src_set(src->begin(), src->end());
  const std::set<Element> dst_set(dst->begin(), dst->end());
  std::set<Element> firsts;
  std::set<Element> seconds;
  for (const auto& [a, b] : iso.pairs) {
    from.check(a);
    to.check(b);
    firsts.insert(a);
    seconds.insert(b);
  }
  if (firsts != src_set) throw UsageError("isomorphism domain differs from the source subgroup");
  if (seconds != dst_set) throw UsageError("isomorphism image differs from the target subgroup");
  for (const auto& [a1, b1] : iso.pairs) {
    for (const auto& [a2, b2] : iso.pairs) {
      if (phi.apply(Direction::Forward, from.multiply(a1, a2)) != to.multiply(b1, b2)) {
        throw UsageError("isomorphism table is not a homomorphism");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Double cosets

namespace {

// x = u a u' with u, u' in C, preferring u' = identity.
std::optional<std::pair<Element, Element>> in_double_coset(const Group& group, const SubgroupSpec& c,
                                                           const Element& a, const Element& x) {
  switch (group.kind()) {
    case GroupKind::Integer:
    case GroupKind::Cyclic: {
      Element u = group.multiply(x, group.invert(a));
      if (group.contains(c, u)) return std::make_pair(std::move(u), group.identity());
      return std::nullopt;
    }
    case GroupKind::FiniteTable: {
      const Element a_inv = group.invert(a);
      const auto elems = group.subgroup_elements(c);
      for (const auto& c2 : *elems) {
        Element u = group.multiply(group.multiply(x, group.invert(c2)), a_inv);
        if (group.contains(c, u)) return std::make_pair(std::move(u), c2);
      }
      return std::nullopt;
    }
    case GroupKind::Free: {
      const auto& cs = c;
      if (cs.kind == SubgroupSpec::Kind::Trivial || cs.kind == SubgroupSpec::Kind::Elements ||
          (cs.kind == SubgroupSpec::Kind::CyclicGenerated && cs.generator.letters().empty())) {
        if (x == a) return std::make_pair(group.identity(), group.identity());
        return std::nullopt;
      }
      // C = <g^k>. Write a = g^p m g^q with m not starting or ending in g.
      const SubgroupSpec gen_sub =
          cs.kind == SubgroupSpec::Kind::Index
              ? SubgroupSpec::cyclic_generated(group.generator_power(0, cs.modulus))
              : cs;
      const auto& gw = gen_sub.generator.letters();
      const int letter = std::abs(gw.front());
      const BigInt k = big_abs(BigInt(static_cast<long long>(gw.size())));
      const auto strip = [&](const std::vector<int>& w) {
        const BigInt s = leading_run(w, letter);
        const auto lead = static_cast<std::size_t>(big_abs(s));
        std::vector<int> rest(w.begin() + static_cast<std::ptrdiff_t>(lead), w.end());
        const BigInt r = trailing_run(rest, letter);
        rest.resize(rest.size() - static_cast<std::size_t>(big_abs(r)));
        return std::make_tuple(s, std::move(rest), r);
      };
      const auto [p, m, q] = strip(a.letters());
      const auto [s, mx, r] = strip(x.letters());
      if (m.empty()) {
        // a is a power of g: CaC = g^(p+q+kZ).
        if (!mx.empty() || floor_mod(s + r - p - q, k) != 0) return std::nullopt;
        return std::make_pair(Element::word(free_power_of_letter(letter, s + r - p - q)),
                              group.identity());
      }
      if (mx != m || floor_mod(s - p, k) != 0 || floor_mod(r - q, k) != 0) return std::nullopt;
      return std::make_pair(Element::word(free_power_of_letter(letter, s - p)),
                            Element::word(free_power_of_letter(letter, r - q)));
    }
  }
  return std::nullopt;
}

}  // namespace

bool double_cosets_coincide(const Group& group, const SubgroupSpec& c, const Element& a) {
  return in_double_coset(group, c, a, group.invert(a)).has_value();
}

std::optional<DoubleCosetFactor> double_coset_factor(const Group& group, const SubgroupSpec& c,
                                                     const Element& a, const Element& x) {
  group.check(a);
  group.check(x);
  if (group.contains(c, a)) throw DomainError("distinguished element lies in the amalgamated subgroup");
  if (double_cosets_coincide(group, c, a)) {
    throw UnsupportedCase(
        "CaC = Ca^-1C for the distinguished element; the segment quasi-homomorphism is only "
        "implemented when the double cosets differ");
  }
  if (auto f = in_double_coset(group, c, a, x)) {
    return DoubleCosetFactor{std::move(f->first), 1, std::move(f->second)};
  }
  if (auto f = in_double_coset(group, c, group.invert(a), x)) {
    return DoubleCosetFactor{std::move(f->first), -1, std::move(f->second)};
  }
  return std::nullopt;
}

}  // namespace palinwidth
