#include <doctest.h>

#include <map>
#include <json.hpp>
#include <set>

#include "oracles.hpp"
#include "palinwidth/errors.hpp"
#include "palinwidth/oracle.hpp"
#include "palinwidth/word_io.hpp"

using namespace palinwidth;

namespace {

using Letters = std::vector<int>;

const AmalgamPresentation& zz() {
  static const AmalgamPresentation pres = free_product_zz();
  return pres;
}
const HnnPresentation& bs23() {
  static const HnnPresentation pres = baumslag_solitar(2, 3);
  return pres;
}

EnumerationConfig config(std::size_t length, int exp, int depth = 3) {
  EnumerationConfig cfg;
  cfg.max_length = length;
  cfg.exponent_bound = exp;
  cfg.depth = depth;
  return cfg;
}

// Reduced Z * Z words with at most `length` syllables, exponents bounded by exp.
std::set<Letters> zz_ball(std::size_t length, int exp) {
  std::set<Letters> out{{}};
  std::vector<Letters> frontier{{}};
  for (std::size_t n = 0; n < length; ++n) {
    std::vector<Letters> next;
    for (const auto& w : frontier) {
      for (int gen : {1, 2}) {
        if (!w.empty() && std::abs(w.back()) == gen) continue;
        for (int e = -exp; e <= exp; ++e) {
          if (e == 0) continue;
          Letters v = w;
          for (int i = 0; i < std::abs(e); ++i) v.push_back(e > 0 ? gen : -gen);
          next.push_back(v);
          out.insert(v);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

bool literal_palindrome(const Letters& w) { return std::equal(w.begin(), w.end(), w.rbegin()); }

Letters reduce_concat(Letters x, const Letters& y) {
  for (int l : y) {
    if (!x.empty() && x.back() == -l) {
      x.pop_back();
    } else {
      x.push_back(l);
    }
  }
  return x;
}

std::map<Letters, int> zz_distances(const std::set<Letters>& ball, int depth) {
  std::vector<Letters> pals;
  for (const auto& w : ball) {
    if (literal_palindrome(w)) pals.push_back(w);
  }
  std::map<Letters, int> dist{{Letters{}, 0}};
  std::vector<Letters> frontier{{}};
  for (int d = 1; d <= depth; ++d) {
    std::vector<Letters> next;
    for (const auto& x : frontier) {
      for (const auto& p : pals) {
        Letters y = reduce_concat(x, p);
        if (ball.count(y) && !dist.count(y)) {
          dist[y] = d;
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

TEST_CASE("Z * Z enumeration matches an independent generator") {
  for (int exp : {1, 2, 3}) {
    for (std::size_t len : {0u, 1u, 2u, 3u}) {
      const auto elems = enumerate_elements(zz(), config(len, exp));
      std::set<Letters> seen;
      for (const auto& w : elems) seen.insert(oracle::free_reduce_zz(w));
      CHECK(seen.size() == elems.size());
      CHECK(seen == zz_ball(len, exp));
    }
  }
  CHECK(enumerate_elements(zz(), config(2, 3)).size() == 85);
}

TEST_CASE("small amalgam balls") {
  const AmalgamPresentation z4 = amalgam_z4z2z4();
  const auto elems = enumerate_elements(z4, config(1, 3));
  CHECK(elems.size() == 6);
  std::set<std::string> names;
  for (const auto& w : elems) names.insert(format_amalgam_word(z4, w));
  CHECK(names == std::set<std::string>{"", "x", "x^2", "x^3", "y", "y^3"});
  CHECK(enumerate_elements(z4, config(2, 3)).size() == 6 + 2 * 1 * 2);
}

TEST_CASE("palindrome enumeration counts") {
  for (int exp : {1, 2, 3}) {
    for (std::size_t len : {1u, 3u, 5u, 6u}) {
      const auto pals = enumerate_group_palindromes(zz(), config(len, exp));
      std::set<Letters> expected;
      for (const auto& w : zz_ball(len, exp)) {
        if (literal_palindrome(w)) expected.insert(w);
      }
      std::set<Letters> got;
      for (const auto& p : pals) {
        CHECK(is_group_palindrome_amalgam(zz(), p));
        got.insert(oracle::free_reduce_zz(p));
      }
      CHECK(got == expected);
      CHECK(got.size() == pals.size());
    }
  }
  const std::size_t expected_9 = 1 + 12 + 72 + 432 + 2592 + 15552;
  CHECK(enumerate_group_palindromes(zz(), config(9, 3)).size() == expected_9);
}

TEST_CASE("HNN enumeration is closed and distinct") {
  const EnumerationConfig cfg = config(2, 2);
  const auto elems = enumerate_elements(bs23(), cfg);
  std::set<std::string> keys;
  for (const auto& w : elems) {
    CHECK(w.exps.size() <= 2);
    CHECK(hnn_normal_form(bs23(), w).bases == w.bases);
    keys.insert(format_hnn_word(bs23(), w));
  }
  CHECK(keys.size() == elems.size());
  // Every element of a word ball lands in the enumeration whenever its normal form qualifies.
  std::vector<HnnWord> words{hnn_base_word(Element::scalar(0))};
  for (int step = 0; step < 4; ++step) {
    std::vector<HnnWord> next;
    for (const auto& w : words) {
      for (int e : {-1, 1}) {
        HnnWord v = w;
        v.exps.push_back(e);
        v.bases.push_back(Element::scalar(0));
        next.push_back(v);
      }
      for (long long k : {-1LL, 1LL}) {
        HnnWord v = w;
        v.bases.back() = Element::scalar(v.bases.back().value() + k);
        next.push_back(v);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  std::size_t hits = 0;
  for (const auto& w : words) {
    const HnnWord nf = hnn_normal_form(bs23(), w);
    bool qualifies = nf.exps.size() <= 2;
    for (const auto& b : nf.bases) qualifies = qualifies && abs(b.value()) <= 2;
    if (!qualifies) continue;
    ++hits;
    CHECK(keys.count(format_hnn_word(bs23(), nf)) == 1);
  }
  CHECK(hits > 20);
}

TEST_CASE("HNN palindromes match a brute-force scan of reduced spellings") {
  for (const auto& [len, exp] : {std::pair<std::size_t, int>{4, 2}, {5, 1}}) {
    std::vector<HnnWord> words{hnn_base_word(Element::scalar(0))};
    std::vector<HnnWord> all;
    for (std::size_t n = 0; n <= len; ++n) {
      std::vector<HnnWord> next;
      for (const auto& w : words) {
        for (long long b = -exp; b <= exp; ++b) {
          HnnWord v = w;
          v.bases.back() = Element::scalar(b);
          all.push_back(v);
          if (n == len) continue;
          for (int e : {-1, 1}) {
            HnnWord u = v;
            u.exps.push_back(e);
            u.bases.push_back(Element::scalar(0));
            next.push_back(u);
          }
        }
      }
      words = std::move(next);
    }
    std::set<std::string> expected;
    for (const auto& w : all) {
      if (britton_reduce(bs23(), w).exps.size() != w.exps.size()) continue;
      if (oracle::bs_matrix(2, 3, w) != oracle::bs_matrix(2, 3, reverse_word(w))) continue;
      if (!is_group_palindrome_hnn(bs23(), w)) continue;
      expected.insert(format_hnn_word(bs23(), hnn_normal_form(bs23(), w)));
    }
    std::set<std::string> got;
    for (const auto& p : enumerate_group_palindromes(bs23(), config(len, exp))) {
      got.insert(format_hnn_word(bs23(), hnn_normal_form(bs23(), p)));
    }
    CHECK(got == expected);
    CHECK(expected.size() > 50);
  }
}

TEST_CASE("cross-check distances match an independent BFS in Z * Z") {
  for (int exp : {1, 2}) {
    const EnumerationConfig cfg = config(4, exp, 3);
    const OracleReport report = cross_check(Presentation{zz()}, cfg);
    const auto ball = zz_ball(4, exp);
    const auto dist = zz_distances(ball, 3);
    CHECK(report.records.size() == ball.size());
    CHECK(report.violations() == 0);
    std::size_t resolved = 0;
    for (const auto& r : report.records) {
      const Letters key = oracle::free_reduce_zz(parse_amalgam_word(zz(), r.word));
      const auto it = dist.find(key);
      if (it == dist.end()) {
        CHECK_FALSE(r.exact_pl.has_value());
      } else {
        ++resolved;
        REQUIRE(r.exact_pl.has_value());
        CHECK(*r.exact_pl == it->second);
        CHECK(r.lower_bound <= *r.exact_pl);
      }
      CHECK(r.palindrome == literal_palindrome(key));
      CHECK(r.length == oracle::runs(key));
    }
    CHECK(report.resolved == resolved);
  }
}

TEST_CASE("cross-check is deterministic and its JSON lines parse") {
  const EnumerationConfig cfg = config(3, 1, 3);
  const OracleReport a = cross_check(Presentation{bs23()}, cfg);
  const OracleReport b = cross_check(Presentation{bs23()}, cfg);
  REQUIRE(a.records.size() == b.records.size());
  CHECK(a.violations() == 0);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(to_json_line(a.records[i]) == to_json_line(b.records[i]));
    const auto j = nlohmann::json::parse(to_json_line(a.records[i]));
    CHECK(j.at("word") == a.records[i].word);
    CHECK(j.at("delta") == a.records[i].delta);
    if (a.records[i].exact_pl) {
      CHECK(j.at("exact_pl") == *a.records[i].exact_pl);
      CHECK(a.records[i].lower_bound <= *a.records[i].exact_pl);
    } else {
      CHECK(j.at("exact_pl").is_null());
    }
  }
  CHECK(a.records.front().exact_pl == 0);
}

TEST_CASE("palindrome Delta stays within its bound") {
  const auto h = verify_palindrome_delta(Presentation{bs23()}, config(5, 2));
  CHECK(h.violations == 0);
  CHECK(h.max_delta <= 1);
  const auto z = verify_palindrome_delta(Presentation{zz()}, config(5, 2));
  CHECK(z.violations == 0);
  CHECK(z.max_delta <= 3);
}

TEST_CASE("enumeration cap") {
  EnumerationConfig cfg = config(6, 3);
  cfg.cap = 100;
  CHECK_THROWS_AS(enumerate_elements(zz(), cfg), ResourceError);
  CHECK_THROWS_AS(enumerate_elements(bs23(), cfg), ResourceError);
}
