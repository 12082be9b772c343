#include "palinwidth/verify.hpp"

#include <algorithm>
#include <limits>

#include "palinwidth/word_io.hpp"

namespace palinwidth {

namespace {

template <class F>
VerifyReport run_trials(std::string property, std::uint64_t trials, F&& check) {
  VerifyReport report;
  report.property = std::move(property);
  report.trials = trials;
  report.max_defect = std::numeric_limits<std::int64_t>::min();
  for (std::uint64_t i = 0; i < trials; ++i) check(i, report);
  if (trials == 0) report.max_defect = 0;
  return report;
}

void note_violation(VerifyReport& report, const std::string& witness) {
  if (report.violations++ == 0) report.first_violation = witness;
}

bool dk_antisymmetric(const SegmentCounts& g, const SegmentCounts& inv) {
  const std::int64_t top = std::max(g.max_k(), inv.max_k());
  for (std::int64_t k = 1; k <= top; ++k) {
    if (g.d(k) + inv.d(k) != 0) return false;
  }
  return true;
}

}  // namespace

VerifyReport verify_quasimorphism(const Presentation& pres, const SamplerConfig& cfg, std::uint64_t trials) {
  if (const auto* h = std::get_if<HnnPresentation>(&pres)) {
    auto report = run_trials("quasimorphism", trials, [&](std::uint64_t i, VerifyReport& r) {
      auto rng = trial_rng(cfg.seed, i);
      const HnnWord x = random_hnn_word(*h, rng, cfg);
      const HnnWord y = random_hnn_word(*h, rng, cfg);
      const std::int64_t defect =
          delta_hnn(*h, hnn_concat(*h, x, y)) - delta_hnn(*h, x) - delta_hnn(*h, y);
      r.max_defect = std::max(r.max_defect, defect);
      if (defect > 6) note_violation(r, format_hnn_word(*h, x) + " | " + format_hnn_word(*h, y));
    });
    report.allowed_defect = 6;
    return report;
  }
  const auto& a = std::get<AmalgamPresentation>(pres);
  a.case1_element();
  auto report = run_trials("quasimorphism", trials, [&](std::uint64_t i, VerifyReport& r) {
    auto rng = trial_rng(cfg.seed, i);
    const AmalgamWord x = random_amalgam_word(a, rng, cfg);
    const AmalgamWord y = random_amalgam_word(a, rng, cfg);
    const std::int64_t defect =
        delta_amalgam(a, amalgam_concat(x, y)) - delta_amalgam(a, x) - delta_amalgam(a, y);
    r.max_defect = std::max(r.max_defect, defect);
    if (defect > 9) note_violation(r, format_amalgam_word(a, x) + " | " + format_amalgam_word(a, y));
  });
  report.allowed_defect = 9;
  return report;
}

VerifyReport verify_signature(const Presentation& pres, const SamplerConfig& cfg, std::uint64_t trials) {
  if (const auto* h = std::get_if<HnnPresentation>(&pres)) {
    return run_trials("signature", trials, [&](std::uint64_t i, VerifyReport& r) {
      auto rng = trial_rng(cfg.seed, i);
      const HnnWord w = random_hnn_word(*h, rng, cfg);
      const int count = static_cast<int>(std::uniform_int_distribution<int>(1, 5)(rng));
      const HnnWord respelled = respell_with_pinches(*h, w, rng, count);
      if (signature(*h, w) != signature(*h, respelled) || !word_equal(*h, w, respelled)) {
        note_violation(r, format_hnn_word(*h, w) + " | " + format_hnn_word(*h, respelled));
      }
    });
  }
  const auto& a = std::get<AmalgamPresentation>(pres);
  return run_trials("signature", trials, [&](std::uint64_t i, VerifyReport& r) {
    auto rng = trial_rng(cfg.seed, i);
    const AmalgamWord w = random_amalgam_word(a, rng, cfg);
    const int count = static_cast<int>(std::uniform_int_distribution<int>(1, 5)(rng));
    const AmalgamWord respelled = respell_with_c(a, w, rng, count);
    if (syllable_length(a, w) != syllable_length(a, respelled) || !amalgam_word_equal(a, w, respelled)) {
      note_violation(r, format_amalgam_word(a, w) + " | " + format_amalgam_word(a, respelled));
    }
  });
}

VerifyReport verify_inverse_dk(const Presentation& pres, const SamplerConfig& cfg, std::uint64_t trials) {
  if (const auto* h = std::get_if<HnnPresentation>(&pres)) {
    return run_trials("inverse-dk", trials, [&](std::uint64_t i, VerifyReport& r) {
      auto rng = trial_rng(cfg.seed, i);
      const HnnWord w = random_hnn_word(*h, rng, cfg);
      if (!dk_antisymmetric(segment_counts_hnn(signature(*h, w)),
                            segment_counts_hnn(signature(*h, hnn_inverse(*h, w))))) {
        note_violation(r, format_hnn_word(*h, w));
      }
    });
  }
  const auto& a = std::get<AmalgamPresentation>(pres);
  a.case1_element();
  return run_trials("inverse-dk", trials, [&](std::uint64_t i, VerifyReport& r) {
    auto rng = trial_rng(cfg.seed, i);
    const AmalgamWord w = random_amalgam_word(a, rng, cfg);
    if (!dk_antisymmetric(count_a_segments(special_form(a, w)),
                          count_a_segments(special_form(a, amalgam_inverse(a, w))))) {
      note_violation(r, format_amalgam_word(a, w));
    }
  });
}

}  // namespace palinwidth
