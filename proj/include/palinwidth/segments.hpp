#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace palinwidth {

/// Run statistics: p[k] counts +1 sections of length k, m[k] the -1 sections.
struct SegmentCounts {
  std::map<std::int64_t, std::int64_t> p;
  std::map<std::int64_t, std::int64_t> m;

  std::int64_t p_at(std::int64_t k) const;
  std::int64_t m_at(std::int64_t k) const;
  std::int64_t d(std::int64_t k) const { return p_at(k) - m_at(k); }
  std::int64_t r(std::int64_t k) const;
  /// Largest k with a nonzero count, 0 if none.
  std::int64_t max_k() const;
  /// Sum of r_k over all k.
  std::int64_t delta() const;
};

/// Maximal constant-sign runs of a +-1 sequence.
SegmentCounts segment_counts_hnn(const std::vector<int>& signature);

struct LowerBoundCertificate {
  std::int64_t delta = 0;
  std::int64_t bound = 0;
  std::string inequality;
};

/// bound = ceil((delta + offset) / slope), at least 1 for nontrivial
/// elements and 0 for the identity.
LowerBoundCertificate make_certificate(std::int64_t delta, bool nontrivial, std::int64_t slope,
                                       std::int64_t offset, std::string inequality);

}  // namespace palinwidth
