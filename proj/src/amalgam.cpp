#include "palinwidth/amalgam.hpp"

#include <algorithm>

#include "palinwidth/errors.hpp"

namespace palinwidth {

AmalgamPresentation::AmalgamPresentation(GroupSpec factor_a, GroupSpec factor_b, SubgroupSpec c_in_a,
                                         SubgroupSpec c_in_b, IsoSpec identify)
    : a_(std::move(factor_a)),
      b_(std::move(factor_b)),
      ca_(std::move(c_in_a)),
      cb_(std::move(c_in_b)),
      identify_(identify) {
  validate_isomorphism(a_, ca_, b_, cb_, identify);
  if (!a_.is_proper(ca_) || !b_.is_proper(cb_)) {
    throw UsageError("amalgamated subgroup must be proper in both factors");
  }
}

Element AmalgamPresentation::transport(const Element& c, Factor from, Factor to) const {
  if (from == to) return c;
  return identify_.apply(from == Factor::A ? Direction::Forward : Direction::Backward, c);
}

void AmalgamPresentation::set_distinguished(Factor f, const Element& a) {
  const Group& g = factor(f);
  g.check(a);
  if (g.contains(c(f), a)) throw DomainError("distinguished element lies in C");
  distinguished_ = Distinguished{f, a, !double_cosets_coincide(g, c(f), a)};
}

const Distinguished& AmalgamPresentation::case1_element() const {
  if (!distinguished_) throw UsageError("presentation has no distinguished element a");
  if (!distinguished_->case1) {
    throw UnsupportedCase(
        "CaC = Ca^-1C: the segment quasi-homomorphism is not implemented for this case");
  }
  return *distinguished_;
}

void AmalgamPresentation::set_partner(const Syllable& b) {
  factor(b.factor).check(b.x);
  if (in_c(b)) throw DomainError("witness letter b lies in C");
  partner_ = b;
}

Syllable AmalgamPresentation::partner() const {
  if (partner_) return *partner_;
  const Factor f = distinguished_ ? other(distinguished_->factor) : Factor::B;
  const Group& g = factor(f);
  for (std::size_t i = 0; i < g.generator_count(); ++i) {
    Syllable s{f, g.generator(i)};
    if (!in_c(s)) return s;
  }
  throw DomainError("no generator of the partner factor lies outside C");
}

AmalgamWord amalgam_concat(const AmalgamWord& x, const AmalgamWord& y) {
  AmalgamWord out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

AmalgamWord amalgam_inverse(const AmalgamPresentation& pres, const AmalgamWord& w) {
  AmalgamWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->factor, pres.factor(it->factor).invert(it->x)});
  }
  return out;
}

void amalgam_check(const AmalgamPresentation& pres, const AmalgamWord& w) {
  for (const auto& s : w) pres.factor(s.factor).check(s.x);
}

AmalgamWord normal_reduce(const AmalgamPresentation& pres, const AmalgamWord& w) {
  amalgam_check(pres, w);
  AmalgamWord stack;
  Element carry = pres.factor(Factor::A).identity();  // element of C, factor A copy
  for (const auto& syl : w) {
    const Group& g = pres.factor(syl.factor);
    Element y = g.multiply(pres.transport(carry, Factor::A, syl.factor), syl.x);
    carry = pres.factor(Factor::A).identity();
    if (!stack.empty() && stack.back().factor == syl.factor) {
      y = g.multiply(stack.back().x, y);
      stack.pop_back();
    }
    if (g.is_identity(y)) continue;
    if (g.contains(pres.c(syl.factor), y)) {
      carry = pres.transport(y, syl.factor, Factor::A);
      continue;
    }
    stack.push_back({syl.factor, std::move(y)});
  }
  if (!pres.factor(Factor::A).is_identity(carry)) {
    if (stack.empty()) {
      stack.push_back({Factor::A, carry});
    } else {
      Syllable& top = stack.back();
      top.x = pres.factor(top.factor).multiply(top.x, pres.transport(carry, Factor::A, top.factor));
    }
  }
  return stack;
}

AmalgamWord amalgam_normal_form(const AmalgamPresentation& pres, const AmalgamWord& w) {
  AmalgamWord out = normal_reduce(pres, w);
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    const Group& g = pres.factor(out[i].factor);
    const CosetSplit split = g.left_coset_split(pres.c(out[i].factor), out[i].x);
    out[i].x = split.rep;
    Syllable& next = out[i + 1];
    next.x = pres.factor(next.factor)
                 .multiply(pres.transport(split.part, out[i].factor, next.factor), next.x);
  }
  return out;
}

bool is_reduced(const AmalgamPresentation& pres, const AmalgamWord& w) {
  if (w.size() == 1) return !pres.factor(w[0].factor).is_identity(w[0].x);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (pres.in_c(w[i])) return false;
    if (i > 0 && w[i].factor == w[i - 1].factor) return false;
  }
  return true;
}

std::size_t syllable_length(const AmalgamPresentation& pres, const AmalgamWord& w) {
  return normal_reduce(pres, w).size();
}

bool amalgam_is_trivial(const AmalgamPresentation& pres, const AmalgamWord& w) {
  return normal_reduce(pres, w).empty();
}

bool amalgam_word_equal(const AmalgamPresentation& pres, const AmalgamWord& x, const AmalgamWord& y) {
  return amalgam_is_trivial(pres, amalgam_concat(x, amalgam_inverse(pres, y)));
}

SpecialFormWord special_form(const AmalgamPresentation& pres, const AmalgamWord& w) {
  const Distinguished& a = pres.case1_element();
  const AmalgamWord r = normal_reduce(pres, w);
  const Group& ga = pres.factor(a.factor);
  SpecialFormWord out;
  std::optional<Element> pending;  // u' waiting for the right neighbour, in a's factor
  for (std::size_t i = 0; i < r.size(); ++i) {
    Syllable syl = r[i];
    const auto pos = static_cast<std::int64_t>(i);
    if (pending) {
      const Group& g = pres.factor(syl.factor);
      syl.x = g.multiply(pres.transport(*pending, a.factor, syl.factor), syl.x);
      pending.reset();
    }
    std::optional<DoubleCosetFactor> f;
    if (syl.factor == a.factor && !pres.in_c(syl)) {
      f = double_coset_factor(ga, pres.c(a.factor), a.element, syl.x);
    }
    if (!f) {
      out.push_back({syl, 0, pos});
      continue;
    }
    if (!ga.is_identity(f->u)) {
      if (i == 0) {
        out.push_back({{a.factor, f->u}, 0, -1});
      } else {
        Syllable& left = out.back().s;
        left.x = pres.factor(left.factor)
                     .multiply(left.x, pres.transport(f->u, a.factor, left.factor));
      }
    }
    out.push_back({{a.factor, ga.power(a.element, f->eps)}, f->eps, pos});
    if (!ga.is_identity(f->u_prime)) {
      if (i + 1 == r.size()) {
        out.push_back({{a.factor, f->u_prime}, 0, -1});
      } else {
        pending = f->u_prime;
      }
    }
  }
  return out;
}

AmalgamWord special_form_word(const SpecialFormWord& sw) {
  AmalgamWord out;
  for (const auto& s : sw) out.push_back(s.s);
  return out;
}

SegmentCounts count_a_segments(const SpecialFormWord& sw) {
  SegmentCounts counts;
  std::optional<std::int64_t> last_plus;
  std::optional<std::int64_t> last_minus;
  for (const auto& s : sw) {
    if (s.a_power == 0) continue;
    auto& last = s.a_power > 0 ? last_plus : last_minus;
    if (last) {
      const std::int64_t gap = s.position - *last - 1;
      if (gap % 2 == 0) throw InvariantFailure("a-letters separated by an even number of syllables");
      ++(s.a_power > 0 ? counts.p : counts.m)[(gap + 1) / 2];
    }
    last = s.position;
  }
  return counts;
}

std::int64_t delta_amalgam(const AmalgamPresentation& pres, const AmalgamWord& w) {
  return count_a_segments(special_form(pres, w)).delta();
}

AmalgamWord reverse_word_amalgam(const AmalgamWord& w) { return AmalgamWord(w.rbegin(), w.rend()); }

bool is_group_palindrome_amalgam(const AmalgamPresentation& pres, const AmalgamWord& w) {
  const AmalgamWord r = normal_reduce(pres, w);
  return amalgam_word_equal(pres, r, reverse_word_amalgam(r));
}

AmalgamSymmetricForm symmetrize_palindrome_amalgam(const AmalgamPresentation& pres,
                                                   const AmalgamWord& w) {
  if (!is_group_palindrome_amalgam(pres, w)) throw DomainError("word is not a group-palindrome");
  const AmalgamWord r = normal_reduce(pres, w);
  AmalgamSymmetricForm out;
  out.c = pres.factor(Factor::A).identity();
  if (r.empty()) return out;
  if (r.size() % 2 == 0) throw InvariantFailure("even-length reduced group-palindrome");
  const std::size_t k = r.size() / 2;
  const AmalgamWord left(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
  const AmalgamWord right = reverse_word_amalgam(left);
  const AmalgamWord core = normal_reduce(
      pres, amalgam_concat(amalgam_concat(amalgam_inverse(pres, left), r), amalgam_inverse(pres, right)));
  const Syllable& xk = r[k];
  const Group& g = pres.factor(xk.factor);
  if (core.size() != 1) throw InvariantFailure("palindrome core is not a single syllable");
  const Element mid = pres.transport(core[0].x, core[0].factor, xk.factor);
  out.c = g.multiply(g.invert(xk.x), mid);
  if (!g.contains(pres.c(xk.factor), out.c)) throw InvariantFailure("palindrome core leaves x_k C");
  out.word = left;
  out.word.push_back({xk.factor, mid});
  out.word.insert(out.word.end(), right.begin(), right.end());
  if (!amalgam_word_equal(pres, out.word, r)) throw InvariantFailure("symmetric form differs from input");
  return out;
}

LowerBoundCertificate pal_lower_bound_amalgam(const AmalgamPresentation& pres, const AmalgamWord& w) {
  return make_certificate(delta_amalgam(pres, w), !amalgam_is_trivial(pres, w), 12, 9, "Δ ≤ 12k−9");
}

AmalgamWord witness_amalgam(const AmalgamPresentation& pres, std::int64_t n, const Syllable& a,
                            const Syllable& b) {
  if (n < 1) throw UsageError("witness index must be >= 1");
  if (a.factor == b.factor) throw UsageError("a and b must come from different factors");
  pres.factor(a.factor).check(a.x);
  pres.factor(b.factor).check(b.x);
  if (pres.in_c(a) || pres.in_c(b)) throw DomainError("witness letters must lie outside C");
  const Syllable a_inv{a.factor, pres.factor(a.factor).invert(a.x)};
  AmalgamWord out;
  for (std::int64_t j = 1; j <= n; ++j) {
    out.push_back(b);
    out.push_back(a);
    for (std::int64_t i = 0; i < j; ++i) {
      out.push_back(b);
      out.push_back(a_inv);
    }
  }
  out.push_back(b);
  out.push_back(a);
  return out;
}

CosetReps index_two_reps(const AmalgamPresentation& pres) {
  CosetReps reps;
  for (Factor f : {Factor::A, Factor::B}) {
    const Group& g = pres.factor(f);
    if (g.index(pres.c(f)) != std::optional<BigInt>(2)) {
      throw UnsupportedCase("index-two decomposition needs |A:C| = |B:C| = 2");
    }
    std::optional<Element> rep;
    if (auto order = g.order()) {
      for (std::size_t i = 0; i < *order && !rep; ++i) {
        const Element x = Element::scalar(i);
        if (!g.contains(pres.c(f), x)) rep = g.right_coset_split(pres.c(f), x).rep;
      }
    } else {
      for (std::size_t i = 0; i < g.generator_count() && !rep; ++i) {
        const Element x = g.generator(i);
        if (!g.contains(pres.c(f), x)) rep = g.right_coset_split(pres.c(f), x).rep;
      }
    }
    if (!rep) throw UnsupportedCase("no coset representative found outside C");
    (f == Factor::A ? reps.t_a : reps.t_b) = *rep;
  }
  return reps;
}

CNormalForm c_normal_form(const AmalgamPresentation& pres, const AmalgamWord& w, const CosetReps& reps) {
  for (Factor f : {Factor::A, Factor::B}) {
    if (pres.factor(f).index(pres.c(f)) != std::optional<BigInt>(2)) {
      throw UnsupportedCase("C-normal form needs |A:C| = |B:C| = 2");
    }
  }
  const AmalgamWord r = normal_reduce(pres, w);
  const Group& ga = pres.factor(Factor::A);
  CNormalForm out;
  out.x0 = ga.identity();
  if (r.size() == 1 && pres.in_c(r[0])) {
    out.x0 = pres.transport(r[0].x, r[0].factor, Factor::A);
    return out;
  }
  Element carry = ga.identity();  // C-part moving left, factor A copy
  out.tail.resize(r.size());
  for (std::size_t i = r.size(); i > 0; --i) {
    const Syllable& syl = r[i - 1];
    const Group& g = pres.factor(syl.factor);
    const Element y = g.multiply(syl.x, pres.transport(carry, Factor::A, syl.factor));
    const Element& rep = syl.factor == Factor::A ? reps.t_a : reps.t_b;
    const Element part = g.multiply(y, g.invert(rep));
    if (!g.contains(pres.c(syl.factor), part)) throw InvariantFailure("syllable is not in C t");
    carry = pres.transport(part, syl.factor, Factor::A);
    out.tail[i - 1] = {syl.factor, rep};
  }
  out.x0 = carry;
  return out;
}

std::vector<AmalgamWord> index_two_decompose(const AmalgamPresentation& pres, const AmalgamWord& w,
                                             const CosetReps& reps) {
  const CNormalForm nf = c_normal_form(pres, w, reps);
  std::vector<AmalgamWord> pieces;
  if (!pres.factor(Factor::A).is_identity(nf.x0)) pieces.push_back({{Factor::A, nf.x0}});
  const std::size_t n = nf.tail.size();
  if (n == 0) return pieces;
  if (n % 2 == 1) {
    pieces.push_back(nf.tail);
  } else {
    pieces.emplace_back(nf.tail.begin(), nf.tail.end() - 1);
    pieces.push_back({nf.tail.back()});
  }
  return pieces;
}

}  // namespace palinwidth
