#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "palinwidth/group.hpp"
#include "palinwidth/segments.hpp"

namespace palinwidth {

enum class Factor { A = 0, B = 1 };

inline Factor other(Factor f) { return f == Factor::A ? Factor::B : Factor::A; }

struct Syllable {
  Factor factor = Factor::A;
  Element x;

  friend bool operator==(const Syllable& s, const Syllable& t) {
    return s.factor == t.factor && s.x == t.x;
  }
};

using AmalgamWord = std::vector<Syllable>;

struct Distinguished {
  Factor factor = Factor::A;
  Element element;
  /// CaC != Ca^-1C.
  bool case1 = true;
};

/// A *_C B with C_in_A identified with C_in_B via `identify` (forward: A side
/// to B side).
class AmalgamPresentation {
 public:
  AmalgamPresentation(GroupSpec factor_a, GroupSpec factor_b, SubgroupSpec c_in_a,
                      SubgroupSpec c_in_b, IsoSpec identify);

  const Group& factor(Factor f) const { return f == Factor::A ? a_ : b_; }
  const SubgroupSpec& c(Factor f) const { return f == Factor::A ? ca_ : cb_; }
  const Isomorphism& identify() const { return identify_; }

  /// Moves an element of C from factor `from` to its copy in factor `to`.
  Element transport(const Element& c, Factor from, Factor to) const;
  bool in_c(const Syllable& s) const { return factor(s.factor).contains(c(s.factor), s.x); }

  /// Sets the element a used by special forms and Delta. Throws DomainError
  /// when a lies in C.
  void set_distinguished(Factor f, const Element& a);
  const std::optional<Distinguished>& distinguished() const { return distinguished_; }
  /// The distinguished element, or UsageError/UnsupportedCase when it is
  /// missing or in Case 2.
  const Distinguished& case1_element() const;

  /// The letter b of the witness sequence; defaults to the first generator
  /// of the other factor lying outside C.
  void set_partner(const Syllable& b);
  Syllable partner() const;

 private:
  Group a_;
  Group b_;
  SubgroupSpec ca_;
  SubgroupSpec cb_;
  Isomorphism identify_;
  std::optional<Distinguished> distinguished_;
  std::optional<Syllable> partner_;
};

AmalgamWord amalgam_concat(const AmalgamWord& x, const AmalgamWord& y);
AmalgamWord amalgam_inverse(const AmalgamPresentation& pres, const AmalgamWord& w);
void amalgam_check(const AmalgamPresentation& pres, const AmalgamWord& w);

/// Reduced form; interior C-syllables travel to the right, a trailing one
/// merges into its left neighbour.
AmalgamWord normal_reduce(const AmalgamPresentation& pres, const AmalgamWord& w);
/// Unique spelling: reduced, with every syllable but the last a canonical
/// left-coset representative of C. A lone C-element is written in factor A.
AmalgamWord amalgam_normal_form(const AmalgamPresentation& pres, const AmalgamWord& w);
bool is_reduced(const AmalgamPresentation& pres, const AmalgamWord& w);
std::size_t syllable_length(const AmalgamPresentation& pres, const AmalgamWord& w);
bool amalgam_is_trivial(const AmalgamPresentation& pres, const AmalgamWord& w);
bool amalgam_word_equal(const AmalgamPresentation& pres, const AmalgamWord& x, const AmalgamWord& y);

struct SpecialSyllable {
  Syllable s;
  /// +1 or -1 for a standalone a^eps, 0 otherwise.
  int a_power = 0;
  /// Position in the reduced word; -1 for an outer C-part kept at an end.
  std::int64_t position = -1;
};

using SpecialFormWord = std::vector<SpecialSyllable>;

SpecialFormWord special_form(const AmalgamPresentation& pres, const AmalgamWord& w);
AmalgamWord special_form_word(const SpecialFormWord& sw);

/// Throws InvariantFailure when two consecutive a-letters are an even
/// number of syllables apart.
SegmentCounts count_a_segments(const SpecialFormWord& sw);
std::int64_t delta_amalgam(const AmalgamPresentation& pres, const AmalgamWord& w);

AmalgamWord reverse_word_amalgam(const AmalgamWord& w);
bool is_group_palindrome_amalgam(const AmalgamPresentation& pres, const AmalgamWord& w);

struct AmalgamSymmetricForm {
  AmalgamWord word;
  /// c with x''_{k+1} = x_{k+1} c.
  Element c;
};

/// Throws DomainError when w is not a group-palindrome.
AmalgamSymmetricForm symmetrize_palindrome_amalgam(const AmalgamPresentation& pres,
                                                   const AmalgamWord& w);

LowerBoundCertificate pal_lower_bound_amalgam(const AmalgamPresentation& pres, const AmalgamWord& w);

/// b a (b a^-1)^1 b a (b a^-1)^2 ... b a (b a^-1)^n b a
AmalgamWord witness_amalgam(const AmalgamPresentation& pres, std::int64_t n, const Syllable& a,
                            const Syllable& b);

struct CosetReps {
  Element t_a;
  Element t_b;
};

/// Nontrivial right-coset representatives of C; UnsupportedCase unless both
/// indices are 2.
CosetReps index_two_reps(const AmalgamPresentation& pres);

struct CNormalForm {
  Element x0;  // in C, written in factor A
  AmalgamWord tail;
};

CNormalForm c_normal_form(const AmalgamPresentation& pres, const AmalgamWord& w, const CosetReps& reps);
std::vector<AmalgamWord> index_two_decompose(const AmalgamPresentation& pres, const AmalgamWord& w,
                                             const CosetReps& reps);

}  // namespace palinwidth
