#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palinwidth/presentations.hpp"

namespace palinwidth {

struct EnumerationConfig {
  /// Letters are generator powers g^k with 1 <= |k| <= exponent_bound.
  int exponent_bound = 3;
  /// Signature length (HNN) or syllable length (amalgam).
  std::size_t max_length = 3;
  /// Palindromic-length search depth.
  int depth = 3;
  std::size_t cap = 5'000'000;
};

/// Every element whose normal form has length <= max_length and uses only
/// alphabet letters (identity allowed) in its normal-form positions, once
/// each, in normal form. Throws ResourceError past the cap.
std::vector<HnnWord> enumerate_elements(const HnnPresentation& pres, const EnumerationConfig& cfg);
std::vector<AmalgamWord> enumerate_elements(const AmalgamPresentation& pres, const EnumerationConfig& cfg);

/// Every element spelled by a reduced word of length <= max_length over the
/// alphabet that passes the group-palindrome predicate, once each, in
/// normal form.
std::vector<HnnWord> enumerate_group_palindromes(const HnnPresentation& pres, const EnumerationConfig& cfg);
std::vector<AmalgamWord> enumerate_group_palindromes(const AmalgamPresentation& pres,
                                                     const EnumerationConfig& cfg);

struct OracleRecord {
  std::string word;
  std::size_t length = 0;
  bool palindrome = false;
  /// Minimal number of group-palindromes within the ball, if <= depth.
  std::optional<int> exact_pl;
  std::int64_t delta = 0;
  std::int64_t lower_bound = 0;
};

struct OracleReport {
  std::vector<OracleRecord> records;
  std::size_t palindromes = 0;
  std::size_t resolved = 0;
  std::size_t bound_violations = 0;
  std::size_t palindrome_delta_violations = 0;
  std::int64_t max_palindrome_delta = 0;

  std::size_t violations() const { return bound_violations + palindrome_delta_violations; }
};

/// BFS over products of group-palindromes inside the enumeration ball:
/// layer k holds the ball elements first reached as a product of k
/// palindromes, every partial product staying in the ball. Checks each
/// Delta bound against the exact length and Delta(p) <= 1 (HNN) / 3
/// (amalgam) on palindromes.
OracleReport cross_check(const Presentation& pres, const EnumerationConfig& cfg);

struct PalindromeDeltaReport {
  std::size_t palindromes = 0;
  std::size_t violations = 0;
  std::int64_t max_delta = 0;
  std::int64_t allowed = 0;
  std::string first_violation;
};

/// Exhaustive Delta(p) <= 1 (HNN) or <= 3 (amalgam) over
/// enumerate_group_palindromes.
PalindromeDeltaReport verify_palindrome_delta(const Presentation& pres, const EnumerationConfig& cfg);

/// JSON line with the keys word, length, palindrome, exact_pl, delta,
/// lower_bound.
std::string to_json_line(const OracleRecord& r);

}  // namespace palinwidth
