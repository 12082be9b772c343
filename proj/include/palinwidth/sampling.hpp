#pragma once

#include <cstdint>
#include <random>

#include "palinwidth/amalgam.hpp"
#include "palinwidth/hnn.hpp"

namespace palinwidth {

struct SamplerConfig {
  std::uint64_t seed = 1;
  std::size_t max_length = 40;
  int max_exponent = 3;
};

/// Independent stream for one trial, so results do not depend on the order
/// in which trials run.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Up to max_length tokens; each is t^{+-1} with probability 1/2, otherwise
/// a generator power with exponent in +-[1, max_exponent].
HnnWord random_hnn_word(const HnnPresentation& pres, std::mt19937_64& rng, const SamplerConfig& cfg);
/// Up to max_length syllables from random factors, each a generator power.
AmalgamWord random_amalgam_word(const AmalgamPresentation& pres, std::mt19937_64& rng,
                                const SamplerConfig& cfg);

/// Inserts `count` trivial subwords t^-1 x t phi(x)^-1 (x in A) or
/// t y t^-1 phi^-1(y)^-1 (y in B) at random positions.
HnnWord respell_with_pinches(const HnnPresentation& pres, const HnnWord& w, std::mt19937_64& rng,
                             int count);
/// Inserts `count` trivial pairs c, c^-1 (the second in the other factor)
/// at random positions.
AmalgamWord respell_with_c(const AmalgamPresentation& pres, const AmalgamWord& w, std::mt19937_64& rng,
                           int count);

}  // namespace palinwidth
