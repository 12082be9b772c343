#pragma once

#include <cstdint>
#include <string>

#include "palinwidth/presentations.hpp"
#include "palinwidth/sampling.hpp"

namespace palinwidth {

struct VerifyReport {
  std::string property;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  /// Quasimorphism runs: the allowed defect and the largest one observed.
  std::int64_t allowed_defect = 0;
  std::int64_t max_defect = 0;
  /// Serialized witness of the first violation, if any.
  std::string first_violation;

  bool ok() const { return violations == 0; }
};

/// Delta(gh) <= Delta(g) + Delta(h) + 6 (HNN) or + 9 (amalgam).
VerifyReport verify_quasimorphism(const Presentation& pres, const SamplerConfig& cfg, std::uint64_t trials);
/// HNN: signatures survive 1-5 random pinch insertions. Amalgam: syllable
/// length survives 1-5 random C insertions.
VerifyReport verify_signature(const Presentation& pres, const SamplerConfig& cfg, std::uint64_t trials);
/// d_k(g^-1) + d_k(g) = 0 for all k.
VerifyReport verify_inverse_dk(const Presentation& pres, const SamplerConfig& cfg, std::uint64_t trials);

}  // namespace palinwidth
