#pragma once

// Independent models used to check the rewriting code. None of them call
// into the reduction routines under test.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "palinwidth/amalgam.hpp"
#include "palinwidth/hnn.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

// BS(m, n) -> GL2(Q): a = [[1,1],[0,1]], t = diag(m/n, 1). Satisfies
// t^-1 a^m t = a^n, so equal elements have equal matrices.
struct Affine {
  Rational scale = 1;
  Rational shift = 0;

  friend bool operator==(const Affine&, const Affine&) = default;
  Affine operator*(const Affine& o) const { return {scale * o.scale, scale * o.shift + shift}; }
};

inline Affine bs_matrix(long long m, long long n, const palinwidth::HnnWord& w) {
  const auto base = [](const palinwidth::Element& g) { return Affine{1, Rational(g.value())}; };
  Affine acc = base(w.bases[0]);
  for (std::size_t i = 0; i < w.exps.size(); ++i) {
    const Rational lambda(m, n);
    acc = acc * Affine{w.exps[i] > 0 ? lambda : 1 / lambda, 0};
    acc = acc * base(w.bases[i + 1]);
  }
  return acc;
}

// Free reduction over letters +-1 (a) and +-2 (b) for Z * Z words.
inline std::vector<int> free_reduce_zz(const palinwidth::AmalgamWord& w) {
  std::vector<int> out;
  for (const auto& s : w) {
    const int letter = s.factor == palinwidth::Factor::A ? 1 : 2;
    const auto k = static_cast<long long>(s.x.value());
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) {
      const int l = k < 0 ? -letter : letter;
      if (!out.empty() && out.back() == -l) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
  }
  return out;
}

inline std::size_t runs(const std::vector<int>& letters) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i == 0 || std::abs(letters[i]) != std::abs(letters[i - 1])) ++r;
  }
  return r;
}

// Quaternion units {+-1, +-i, +-j, +-k} as (sign, unit index 0..3).
struct Quat {
  int sign = 1;
  int unit = 0;
  friend bool operator==(const Quat&, const Quat&) = default;
  Quat operator*(const Quat& o) const {
    static const int table[4][4][2] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
        {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
        {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
    };
    const auto& e = table[unit][o.unit];
    return {sign * o.sign * e[0], e[1]};
  }
};

// Z4 *_{Z2} Z4 -> Q8 with x -> i, y -> j.
inline Quat q8_image(const palinwidth::AmalgamWord& w) {
  Quat acc;
  for (const auto& s : w) {
    const Quat gen{1, s.factor == palinwidth::Factor::A ? 1 : 2};
    for (long long i = 0; i < static_cast<long long>(s.x.value()); ++i) acc = acc * gen;
  }
  return acc;
}

// Run-length counts of a +-1 sequence by direct scanning.
inline std::vector<std::array<long long, 2>> run_table(const std::vector<int>& sig) {
  std::vector<std::array<long long, 2>> t(sig.size() + 2, {0, 0});
  long long len = 0;
  for (std::size_t i = 0; i <= sig.size(); ++i) {
    if (i > 0 && (i == sig.size() || sig[i] != sig[i - 1])) {
      ++t[static_cast<std::size_t>(len)][sig[i - 1] > 0 ? 0 : 1];
      len = 0;
    }
    ++len;
  }
  return t;
}

}  // namespace oracle
