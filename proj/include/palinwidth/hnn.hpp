#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "palinwidth/group.hpp"
#include "palinwidth/segments.hpp"

namespace palinwidth {

/// G* = <G, t | t^-1 a t = phi(a), a in A>.
class HnnPresentation {
 public:
  HnnPresentation(GroupSpec base, SubgroupSpec a, SubgroupSpec b, IsoSpec phi,
                  std::string stable = "t");

  const Group& base() const { return base_; }
  const SubgroupSpec& a() const { return a_; }
  const SubgroupSpec& b() const { return b_; }
  const Isomorphism& phi() const { return phi_; }
  const std::string& stable() const { return stable_; }

  /// The subgroup a base letter must lie in for t^-s g t^s to pinch:
  /// A for s = +1, B for s = -1.
  const SubgroupSpec& pinch_subgroup(int s) const { return s > 0 ? a_ : b_; }

 private:
  Group base_;
  SubgroupSpec a_;
  SubgroupSpec b_;
  Isomorphism phi_;
  std::string stable_;
};

/// g0 t^e1 g1 ... t^en gn; bases.size() == exps.size() + 1.
struct HnnWord {
  std::vector<Element> bases;
  std::vector<int> exps;

  std::size_t stable_count() const { return exps.size(); }
  friend bool operator==(const HnnWord& x, const HnnWord& y) {
    return x.bases == y.bases && x.exps == y.exps;
  }
};

HnnWord hnn_base_word(const Element& g);
HnnWord hnn_concat(const HnnPresentation& pres, const HnnWord& x, const HnnWord& y);
HnnWord hnn_inverse(const HnnPresentation& pres, const HnnWord& w);
/// Throws UsageError on a malformed word.
void hnn_check(const HnnPresentation& pres, const HnnWord& w);

/// True when bases[i] sits in a pinch t^-s g t^s.
bool hnn_has_pinch_at(const HnnPresentation& pres, const HnnWord& w, std::size_t i);

HnnWord britton_reduce(const HnnPresentation& pres, const HnnWord& w);
/// Unique spelling of the element: Britton-reduced, with every base letter
/// after t a right-coset representative of B and after t^-1 of A.
HnnWord hnn_normal_form(const HnnPresentation& pres, const HnnWord& w);
bool hnn_is_trivial(const HnnPresentation& pres, const HnnWord& w);
bool word_equal(const HnnPresentation& pres, const HnnWord& x, const HnnWord& y);

std::vector<int> signature(const HnnPresentation& pres, const HnnWord& w);

struct RProduct {
  std::size_t r = 0;
  std::vector<int> signature;
};

/// sqn(xy) = sqn(x)[r]sqn(y). Throws InvariantFailure if the cancelled
/// blocks do not match.
RProduct signature_r_product(const HnnPresentation& pres, const HnnWord& x, const HnnWord& y);

std::int64_t delta_hnn(const HnnPresentation& pres, const HnnWord& w);

HnnWord reverse_word(const HnnWord& w);
bool is_group_palindrome_hnn(const HnnPresentation& pres, const HnnWord& w);

struct HnnSymmetricForm {
  HnnWord word;
  /// x with g'_k = x g_k.
  Element middle;
};

/// Throws DomainError when w is not a group-palindrome.
HnnSymmetricForm symmetrize_palindrome_hnn(const HnnPresentation& pres, const HnnWord& w);

LowerBoundCertificate pal_lower_bound_hnn(const HnnPresentation& pres, const HnnWord& w);

/// Signature runs j, j, j with signs s, -s, s where s = (-1)^(j+1), all
/// base letters equal to the filler c.
HnnWord witness_hnn(const HnnPresentation& pres, std::int64_t n, const Element& c);

}  // namespace palinwidth
