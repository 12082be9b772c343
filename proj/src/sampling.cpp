#include "palinwidth/sampling.hpp"

namespace palinwidth {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Element random_letter(const Group& g, std::mt19937_64& rng, int max_exponent) {
  const std::size_t i = uniform(rng, 0, g.generator_count() - 1);
  const auto k = static_cast<long long>(uniform(rng, 1, static_cast<std::size_t>(max_exponent)));
  return g.generator_power(i, uniform(rng, 0, 1) == 0 ? k : -k);
}

// Random element of a subgroup: the subgroup part of a random coset split.
Element random_subgroup_element(const Group& g, const SubgroupSpec& sub, std::mt19937_64& rng) {
  if (auto elems = g.subgroup_elements(sub)) return (*elems)[uniform(rng, 0, elems->size() - 1)];
  Element x = g.identity();
  const std::size_t len = uniform(rng, 1, 4);
  for (std::size_t i = 0; i < len; ++i) x = g.multiply(x, random_letter(g, rng, 12));
  return g.right_coset_split(sub, x).part;
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

HnnWord random_hnn_word(const HnnPresentation& pres, std::mt19937_64& rng, const SamplerConfig& cfg) {
  const Group& g = pres.base();
  HnnWord w{{g.identity()}, {}};
  const std::size_t len = uniform(rng, 0, cfg.max_length);
  for (std::size_t i = 0; i < len; ++i) {
    if (uniform(rng, 0, 1) == 0) {
      w.exps.push_back(uniform(rng, 0, 1) == 0 ? 1 : -1);
      w.bases.push_back(g.identity());
    } else {
      w.bases.back() = g.multiply(w.bases.back(), random_letter(g, rng, cfg.max_exponent));
    }
  }
  return w;
}

AmalgamWord random_amalgam_word(const AmalgamPresentation& pres, std::mt19937_64& rng,
                                const SamplerConfig& cfg) {
  AmalgamWord w;
  const std::size_t len = uniform(rng, 0, cfg.max_length);
  for (std::size_t i = 0; i < len; ++i) {
    const Factor f = uniform(rng, 0, 1) == 0 ? Factor::A : Factor::B;
    w.push_back({f, random_letter(pres.factor(f), rng, cfg.max_exponent)});
  }
  return w;
}

HnnWord respell_with_pinches(const HnnPresentation& pres, const HnnWord& w, std::mt19937_64& rng,
                             int count) {
  const Group& g = pres.base();
  HnnWord out = w;
  for (int c = 0; c < count; ++c) {
    const std::size_t pos = uniform(rng, 0, out.exps.size());
    const int s = uniform(rng, 0, 1) == 0 ? 1 : -1;
    // s = +1: t^-1 x t phi(x)^-1 with x in A; s = -1: t y t^-1 phi^-1(y)^-1 with y in B.
    const Element x = random_subgroup_element(g, pres.pinch_subgroup(s), rng);
    const Element image = pres.phi().apply(s > 0 ? Direction::Forward : Direction::Backward, x);
    const HnnWord insert{{g.identity(), x, g.invert(image)}, {-s, s}};
    HnnWord left;
    left.bases.assign(out.bases.begin(), out.bases.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
    left.exps.assign(out.exps.begin(), out.exps.begin() + static_cast<std::ptrdiff_t>(pos));
    HnnWord right{{g.identity()}, {}};
    right.bases.insert(right.bases.end(), out.bases.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                       out.bases.end());
    right.exps.assign(out.exps.begin() + static_cast<std::ptrdiff_t>(pos), out.exps.end());
    out = hnn_concat(pres, hnn_concat(pres, left, insert), right);
  }
  return out;
}

AmalgamWord respell_with_c(const AmalgamPresentation& pres, const AmalgamWord& w, std::mt19937_64& rng,
                           int count) {
  AmalgamWord out = w;
  const Group& ga = pres.factor(Factor::A);
  for (int c = 0; c < count; ++c) {
    const std::size_t pos = uniform(rng, 0, out.size());
    const Element x = random_subgroup_element(ga, pres.c(Factor::A), rng);
    const Factor f = uniform(rng, 0, 1) == 0 ? Factor::A : Factor::B;
    const Element first = pres.transport(x, Factor::A, f);
    const Element second = pres.factor(other(f)).invert(pres.transport(x, Factor::A, other(f)));
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos),
               {Syllable{f, first}, Syllable{other(f), second}});
  }
  return out;
}

}  // namespace palinwidth
