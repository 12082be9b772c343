#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace palinwidth {

using BigInt = boost::multiprecision::cpp_int;

enum class GroupKind { Integer, Cyclic, FiniteTable, Free };

/// Description of a base or factor group. Validated when a Group is built
/// from it.
struct GroupSpec {
  GroupKind kind = GroupKind::Integer;
  std::int64_t modulus = 0;                      // cyclic(n)
  std::vector<std::vector<std::size_t>> table;  // finite_table, row-major product
  std::vector<std::string> names;                // finite_table element names
  std::size_t rank = 0;                          // free(rank)
  std::vector<std::string> generators;

  static GroupSpec integer(std::string generator = "a");
  static GroupSpec cyclic(std::int64_t n, std::string generator = "x");
  static GroupSpec finite_table(std::vector<std::vector<std::size_t>> table,
                                std::vector<std::string> names,
                                std::vector<std::string> generators = {});
  static GroupSpec free(std::size_t rank, std::vector<std::string> generators = {});
};

/// Canonical element handle. Integer, cyclic and finite-table groups store a
/// scalar (value, residue, table index); free groups store a freely reduced
/// letter sequence where generator i is +(i+1) and its inverse -(i+1).
class Element {
 public:
  Element() = default;

  static Element scalar(BigInt value) {
    Element e;
    e.value_ = std::move(value);
    return e;
  }
  static Element word(std::vector<int> letters) {
    Element e;
    e.letters_ = std::move(letters);
    e.is_word_ = true;
    return e;
  }

  bool is_word() const { return is_word_; }
  const BigInt& value() const { return value_; }
  const std::vector<int>& letters() const { return letters_; }

  friend bool operator==(const Element& x, const Element& y) {
    return x.is_word_ == y.is_word_ && x.value_ == y.value_ && x.letters_ == y.letters_;
  }
  friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }
  friend bool operator<(const Element& x, const Element& y) {
    if (x.is_word_ != y.is_word_) return x.is_word_ < y.is_word_;
    if (x.value_ != y.value_) return x.value_ < y.value_;
    return x.letters_ < y.letters_;
  }

 private:
  BigInt value_ = 0;
  std::vector<int> letters_;
  bool is_word_ = false;
};

struct SubgroupSpec {
  enum class Kind { Index, Elements, Trivial, CyclicGenerated };
  Kind kind = Kind::Trivial;
  BigInt modulus = 0;             // Index: the subgroup m*Z (or <x^m>)
  std::vector<Element> elements;  // Elements: explicit closed subset
  Element generator;              // CyclicGenerated: powers of this element

  static SubgroupSpec index(BigInt m);
  static SubgroupSpec element_list(std::vector<Element> elements);
  static SubgroupSpec trivial();
  static SubgroupSpec cyclic_generated(Element generator);
};

enum class Direction { Forward, Backward };

struct IsoSpec {
  enum class Kind { IndexPair, Pairs };
  Kind kind = Kind::Pairs;
  BigInt source_modulus = 0;  // IndexPair: k*m -> k*n
  BigInt target_modulus = 0;
  std::vector<std::pair<Element, Element>> pairs;

  static IsoSpec index_pair(BigInt m, BigInt n);
  static IsoSpec from_pairs(std::vector<std::pair<Element, Element>> pairs);
};

/// Compiled form of an IsoSpec. Pure and immutable.
class Isomorphism {
 public:
  Isomorphism() = default;
  explicit Isomorphism(IsoSpec spec);

  const IsoSpec& spec() const { return spec_; }

  bool in_domain(Direction direction, const Element& g) const;

  /// Image of g under phi (Forward) or phi^-1 (Backward). Throws DomainError
  /// when g lies outside the source subgroup of that direction.
  Element apply(Direction direction, const Element& g) const;

 private:
  IsoSpec spec_;
  std::map<Element, Element> forward_;
  std::map<Element, Element> backward_;
};

/// x = part * rep (right coset) or x = rep * part (left coset), part in the
/// subgroup, rep the canonical representative of the coset.
struct CosetSplit {
  Element part;
  Element rep;
};

class Group {
 public:
  explicit Group(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  GroupKind kind() const { return spec_.kind; }
  bool is_abelian() const;
  /// Number of elements for finite groups.
  std::optional<std::size_t> order() const;

  Element identity() const;
  Element multiply(const Element& g, const Element& h) const;
  Element invert(const Element& g) const;
  bool is_identity(const Element& g) const;
  bool equals(const Element& g, const Element& h) const;
  Element power(const Element& g, const BigInt& k) const;

  std::size_t generator_count() const { return spec_.generators.size(); }
  Element generator(std::size_t i) const;
  Element generator_power(std::size_t i, const BigInt& k) const;
  /// Resolves a letter name: a generator, or for finite tables any element name.
  std::optional<Element> letter(std::string_view name) const;

  /// Throws UsageError if g is not a canonical element of this group.
  void check(const Element& g) const;

  /// Exponent-collapsed tokens (`a^3`, `x`, `y^-1`); empty for the identity.
  std::vector<std::string> format_tokens(const Element& g) const;
  std::string format(const Element& g) const;
  /// Parses a product of `<gen>` / `<gen>^<int>` tokens separated by
  /// whitespace or `*`. The empty string and `1` denote the identity.
  Element parse(std::string_view text) const;

  /// Nontrivial generator powers g^k, 1 <= |k| <= bound, deduplicated, in a
  /// deterministic order.
  std::vector<Element> alphabet(int bound) const;

  void validate(const SubgroupSpec& sub) const;
  bool contains(const SubgroupSpec& sub, const Element& g) const;
  /// Index of the subgroup; nullopt when infinite.
  std::optional<BigInt> index(const SubgroupSpec& sub) const;
  /// Elements of a finite subgroup, identity first; nullopt when infinite.
  std::optional<std::vector<Element>> subgroup_elements(const SubgroupSpec& sub) const;
  /// Returns true when the subgroup is decidably proper; false when it is the
  /// whole group.
  bool is_proper(const SubgroupSpec& sub) const;

  CosetSplit right_coset_split(const SubgroupSpec& sub, const Element& x) const;
  CosetSplit left_coset_split(const SubgroupSpec& sub, const Element& x) const;

 private:
  std::int64_t scalar_modulus(const SubgroupSpec& sub) const;
  std::size_t index_of(const Element& g) const;
  // Free groups: subgroups are trivial or <g^k> for a single generator g.
  std::pair<int, BigInt> free_cyclic_base(const SubgroupSpec& sub) const;

  GroupSpec spec_;
  std::size_t identity_index_ = 0;
  std::vector<std::size_t> inverse_;
};

/// Checks that iso maps the subgroup `source` of `from` isomorphically onto
/// `target` of `to`. Throws UsageError describing the first failure.
void validate_isomorphism(const Group& from, const SubgroupSpec& source, const Group& to,
                          const SubgroupSpec& target, const IsoSpec& iso);

struct DoubleCosetFactor {
  Element u;
  int eps = 1;
  Element u_prime;
};

/// True when C a C = C a^-1 C.
bool double_cosets_coincide(const Group& group, const SubgroupSpec& c, const Element& a);

/// Writes x = u a^eps u' with u, u' in C when x lies in CaC or Ca^-1C.
/// u' is the identity whenever x a^-eps already lies in C.
std::optional<DoubleCosetFactor> double_coset_factor(const Group& group, const SubgroupSpec& c,
                                                     const Element& a, const Element& x);

}  // namespace palinwidth
