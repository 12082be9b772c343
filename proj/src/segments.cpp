#include "palinwidth/segments.hpp"

#include <algorithm>
#include <cstdlib>

namespace palinwidth {

namespace {

std::int64_t lookup(const std::map<std::int64_t, std::int64_t>& m, std::int64_t k) {
  auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

std::int64_t SegmentCounts::p_at(std::int64_t k) const { return lookup(p, k); }
std::int64_t SegmentCounts::m_at(std::int64_t k) const { return lookup(m, k); }

std::int64_t SegmentCounts::r(std::int64_t k) const { return std::llabs(d(k)) % 2; }

std::int64_t SegmentCounts::max_k() const {
  std::int64_t k = 0;
  if (!p.empty()) k = std::max(k, p.rbegin()->first);
  if (!m.empty()) k = std::max(k, m.rbegin()->first);
  return k;
}

std::int64_t SegmentCounts::delta() const {
  std::int64_t total = 0;
  for (std::int64_t k = 1; k <= max_k(); ++k) total += r(k);
  return total;
}

SegmentCounts segment_counts_hnn(const std::vector<int>& signature) {
  SegmentCounts counts;
  std::size_t i = 0;
  while (i < signature.size()) {
    std::size_t j = i;
    while (j < signature.size() && signature[j] == signature[i]) ++j;
    auto& target = signature[i] > 0 ? counts.p : counts.m;
    ++target[static_cast<std::int64_t>(j - i)];
    i = j;
  }
  return counts;
}

LowerBoundCertificate make_certificate(std::int64_t delta, bool nontrivial, std::int64_t slope,
                                       std::int64_t offset, std::string inequality) {
  LowerBoundCertificate cert;
  cert.delta = delta;
  cert.inequality = std::move(inequality);
  if (nontrivial) cert.bound = std::max<std::int64_t>(1, (delta + offset + slope - 1) / slope);
  return cert;
}

}  // namespace palinwidth
