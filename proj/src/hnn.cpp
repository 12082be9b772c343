#include "palinwidth/hnn.hpp"

#include <algorithm>

#include "palinwidth/errors.hpp"

namespace palinwidth {

HnnPresentation::HnnPresentation(GroupSpec base, SubgroupSpec a, SubgroupSpec b, IsoSpec phi,
                                 std::string stable)
    : base_(std::move(base)), a_(std::move(a)), b_(std::move(b)), phi_(phi), stable_(std::move(stable)) {
  validate_isomorphism(base_, a_, base_, b_, phi);
  if (!base_.is_proper(a_) || !base_.is_proper(b_)) {
    throw UsageError("associated subgroups must be proper");
  }
  if (base_.letter(stable_)) throw UsageError("stable letter name clashes with a base letter");
}

HnnWord hnn_base_word(const Element& g) { return HnnWord{{g}, {}}; }

void hnn_check(const HnnPresentation& pres, const HnnWord& w) {
  if (w.bases.size() != w.exps.size() + 1) throw UsageError("malformed HNN word");
  for (int e : w.exps) {
    if (e != 1 && e != -1) throw UsageError("stable exponents must be +-1");
  }
  for (const auto& g : w.bases) pres.base().check(g);
}

HnnWord hnn_concat(const HnnPresentation& pres, const HnnWord& x, const HnnWord& y) {
  HnnWord out = x;
  out.bases.back() = pres.base().multiply(out.bases.back(), y.bases.front());
  out.bases.insert(out.bases.end(), y.bases.begin() + 1, y.bases.end());
  out.exps.insert(out.exps.end(), y.exps.begin(), y.exps.end());
  return out;
}

HnnWord hnn_inverse(const HnnPresentation& pres, const HnnWord& w) {
  HnnWord out;
  for (auto it = w.bases.rbegin(); it != w.bases.rend(); ++it) {
    out.bases.push_back(pres.base().invert(*it));
  }
  for (auto it = w.exps.rbegin(); it != w.exps.rend(); ++it) out.exps.push_back(-*it);
  return out;
}

bool hnn_has_pinch_at(const HnnPresentation& pres, const HnnWord& w, std::size_t i) {
  if (i == 0 || i >= w.bases.size() - 1) return false;
  const int before = w.exps[i - 1];
  const int after = w.exps[i];
  if (before != -after) return false;
  return pres.base().contains(pres.pinch_subgroup(after), w.bases[i]);
}

HnnWord britton_reduce(const HnnPresentation& pres, const HnnWord& w) {
  hnn_check(pres, w);
  const Group& g = pres.base();
  HnnWord out{{w.bases.front()}, {}};
  for (std::size_t i = 0; i < w.exps.size(); ++i) {
    const int e = w.exps[i];
    const Element& next = w.bases[i + 1];
    if (!out.exps.empty() && out.exps.back() == -e &&
        g.contains(pres.pinch_subgroup(e), out.bases.back())) {
      const Direction dir = e > 0 ? Direction::Forward : Direction::Backward;
      const Element image = pres.phi().apply(dir, out.bases.back());
      out.bases.pop_back();
      out.exps.pop_back();
      out.bases.back() = g.multiply(g.multiply(out.bases.back(), image), next);
    } else {
      out.exps.push_back(e);
      out.bases.push_back(next);
    }
  }
  return out;
}

HnnWord hnn_normal_form(const HnnPresentation& pres, const HnnWord& w) {
  HnnWord out = britton_reduce(pres, w);
  const Group& g = pres.base();
  for (std::size_t i = out.exps.size(); i > 0; --i) {
    const int e = out.exps[i - 1];
    // t b = phi^-1(b) t for b in B; t^-1 a = phi(a) t^-1 for a in A.
    const SubgroupSpec& sub = e > 0 ? pres.b() : pres.a();
    const CosetSplit split = g.right_coset_split(sub, out.bases[i]);
    out.bases[i] = split.rep;
    const Direction dir = e > 0 ? Direction::Backward : Direction::Forward;
    out.bases[i - 1] = g.multiply(out.bases[i - 1], pres.phi().apply(dir, split.part));
  }
  return out;
}

bool hnn_is_trivial(const HnnPresentation& pres, const HnnWord& w) {
  const HnnWord r = britton_reduce(pres, w);
  return r.exps.empty() && pres.base().is_identity(r.bases.front());
}

bool word_equal(const HnnPresentation& pres, const HnnWord& x, const HnnWord& y) {
  return hnn_is_trivial(pres, hnn_concat(pres, x, hnn_inverse(pres, y)));
}

std::vector<int> signature(const HnnPresentation& pres, const HnnWord& w) {
  return britton_reduce(pres, w).exps;
}

RProduct signature_r_product(const HnnPresentation& pres, const HnnWord& x, const HnnWord& y) {
  const auto sx = signature(pres, x);
  const auto sy = signature(pres, y);
  RProduct out;
  out.signature = signature(pres, hnn_concat(pres, x, y));
  const std::size_t total = sx.size() + sy.size();
  if (out.signature.size() > total || (total - out.signature.size()) % 2 != 0) {
    throw InvariantFailure("signature length of a product has the wrong parity");
  }
  out.r = (total - out.signature.size()) / 2;
  if (out.r > sx.size() || out.r > sy.size()) {
    throw InvariantFailure("cancelled block longer than a factor signature");
  }
  std::vector<int> expected(sx.begin(), sx.end() - static_cast<std::ptrdiff_t>(out.r));
  for (std::size_t i = 0; i < out.r; ++i) {
    if (sy[i] != -sx[sx.size() - 1 - i]) throw InvariantFailure("cancelled blocks are not inverse");
  }
  expected.insert(expected.end(), sy.begin() + static_cast<std::ptrdiff_t>(out.r), sy.end());
  if (expected != out.signature) throw InvariantFailure("sqn(xy) differs from sqn(x)[r]sqn(y)");
  return out;
}

std::int64_t delta_hnn(const HnnPresentation& pres, const HnnWord& w) {
  return segment_counts_hnn(signature(pres, w)).delta();
}

HnnWord reverse_word(const HnnWord& w) {
  HnnWord out = w;
  std::reverse(out.bases.begin(), out.bases.end());
  std::reverse(out.exps.begin(), out.exps.end());
  return out;
}

bool is_group_palindrome_hnn(const HnnPresentation& pres, const HnnWord& w) {
  const HnnWord r = britton_reduce(pres, w);
  return word_equal(pres, r, reverse_word(r));
}

namespace {

// g0 t^e1 ... g_{k-1} t^ek
HnnWord prefix(const Group& g, const HnnWord& w, std::size_t k) {
  HnnWord out;
  out.bases.assign(w.bases.begin(), w.bases.begin() + static_cast<std::ptrdiff_t>(k));
  out.exps.assign(w.exps.begin(), w.exps.begin() + static_cast<std::ptrdiff_t>(k));
  out.bases.push_back(g.identity());
  return out;
}

}  // namespace

HnnSymmetricForm symmetrize_palindrome_hnn(const HnnPresentation& pres, const HnnWord& w) {
  if (!is_group_palindrome_hnn(pres, w)) throw DomainError("word is not a group-palindrome");
  const Group& g = pres.base();
  const HnnWord r = britton_reduce(pres, w);
  const std::size_t n = r.exps.size();
  const std::size_t k = n / 2;

  const HnnWord left = prefix(g, r, k);
  const HnnWord right = reverse_word(left);
  const HnnWord core =
      britton_reduce(pres, hnn_concat(pres, hnn_concat(pres, hnn_inverse(pres, left), r),
                                      hnn_inverse(pres, right)));

  HnnWord mid;
  Element x;
  if (n % 2 == 0) {
    if (!core.exps.empty()) throw InvariantFailure("palindrome core has stable letters");
    mid = core;
    x = g.multiply(core.bases.front(), g.invert(r.bases[k]));
  } else {
    if (core.exps.size() != 1) throw InvariantFailure("palindrome core is not a single stable letter");
    const int e = core.exps.front();
    // Prefer the spelling g_k t^e g'' that keeps the original g_k.
    HnnWord probe{{g.identity(), g.multiply(g.invert(r.bases[k]), core.bases.front())}, {-e}};
    probe = hnn_concat(pres, probe, HnnWord{{g.identity(), core.bases.back()}, {e}});
    const HnnWord rest = britton_reduce(pres, probe);
    if (rest.exps.empty()) {
      mid = HnnWord{{r.bases[k], rest.bases.front()}, {e}};
    } else {
      mid = core;
    }
    x = g.multiply(mid.bases.back(), g.invert(r.bases[k]));
  }
  HnnSymmetricForm out;
  out.word = hnn_concat(pres, hnn_concat(pres, left, mid), right);
  out.middle = x;
  if (!word_equal(pres, out.word, r)) throw InvariantFailure("symmetric form differs from input");
  return out;
}

LowerBoundCertificate pal_lower_bound_hnn(const HnnPresentation& pres, const HnnWord& w) {
  return make_certificate(delta_hnn(pres, w), !hnn_is_trivial(pres, w), 7, 6, "Δ ≤ 7k−6");
}

HnnWord witness_hnn(const HnnPresentation& pres, std::int64_t n, const Element& c) {
  if (n < 1) throw UsageError("witness index must be >= 1");
  const Group& g = pres.base();
  g.check(c);
  if (g.contains(pres.a(), c) || g.contains(pres.b(), c)) {
    throw DomainError("filler letter lies in an associated subgroup");
  }
  HnnWord out{{c}, {}};
  for (std::int64_t j = 1; j <= n; ++j) {
    const int s = j % 2 == 1 ? 1 : -1;
    for (int sign : {s, -s, s}) {
      for (std::int64_t i = 0; i < j; ++i) {
        out.exps.push_back(sign);
        out.bases.push_back(c);
      }
    }
  }
  return out;
}

}  // namespace palinwidth
