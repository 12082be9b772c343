// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "palinwidth/amalgam.hpp"
#include "palinwidth/hnn.hpp"
#include "palinwidth/oracle.hpp"
#include "palinwidth/presentations.hpp"
#include "palinwidth/verify.hpp"
#include "palinwidth/word_io.hpp"

using namespace palinwidth;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    o.ok = false;
    o.detail += "; over the time limit of " + std::to_string(limit_s) + " s";
  }
  if (!o.ok) ++failures;
  std::printf("%s %d %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string report_detail(const VerifyReport& r) {
  std::string s = std::to_string(r.trials) + " trials, " + std::to_string(r.violations) + " violations";
  if (r.allowed_defect > 0) {
    s += ", max defect " + std::to_string(r.max_defect) + " <= " + std::to_string(r.allowed_defect);
  }
  if (!r.first_violation.empty()) s += ", first: " + r.first_violation;
  return s;
}

long long closed_form(long long n) { return (n * (n - 1) / 2) % 2 + n % 2 + (n - 1); }

AmalgamWord g_n(const AmalgamPresentation& p, long long n) {
  return witness_amalgam(p, n, {Factor::A, Element::scalar(1)}, {Factor::B, Element::scalar(1)});
}

}  // namespace

int main() {
  const HnnPresentation bs = baumslag_solitar(2, 3);
  const AmalgamPresentation zz = free_product_zz();
  const AmalgamPresentation z3z = amalgam_z3z();
  const AmalgamPresentation z4 = amalgam_z4z2z4();
  const Element filler = Element::scalar(1);

  criterion(1, "witness delta exactness in bs:2,3", 1.0, [&]() -> Outcome {
    for (long long n = 1; n <= 50; ++n) {
      const HnnWord w = witness_hnn(bs, n, filler);
      const auto stable = static_cast<long long>(w.exps.size());
      if (stable != 3 * n * (n + 1) / 2) return {false, "n=" + std::to_string(n) + " has " + std::to_string(stable) + " stable letters"};
      const auto d = delta_hnn(bs, w);
      if (d != n) return {false, "n=" + std::to_string(n) + " gives " + std::to_string(d)};
    }
    return {true, "delta(a_n) = n for n = 1..50"};
  });

  criterion(2, "witness delta closed form in zz and z3z", 1.0, [&]() -> Outcome {
    for (const auto* p : {&zz, &z3z}) {
      for (long long n = 1; n <= 50; ++n) {
        const auto d = delta_amalgam(*p, g_n(*p, n));
        if (d != closed_form(n)) {
          return {false, "n=" + std::to_string(n) + " gives " + std::to_string(d) + ", expected " +
                             std::to_string(closed_form(n))};
        }
      }
    }
    const bool small = delta_amalgam(zz, g_n(zz, 1)) == 1 && delta_amalgam(zz, g_n(zz, 2)) == 2 &&
                       delta_amalgam(zz, g_n(zz, 3)) == 4;
    return {small, "n = 1..50 match; g1, g2, g3 give 1, 2, 4"};
  });

  criterion(3, "unbounded lower bounds along a_n", 0, [&]() -> Outcome {
    for (long long n = 1; n <= 50; ++n) {
      const auto cert = pal_lower_bound_hnn(bs, witness_hnn(bs, n, filler));
      if (cert.bound != (n + 6 + 6) / 7) {
        return {false, "n=" + std::to_string(n) + " bound " + std::to_string(cert.bound)};
      }
    }
    std::int64_t prev = 0;
    for (long long n = 1; n <= 50; n += 7) {
      const auto b = pal_lower_bound_hnn(bs, witness_hnn(bs, n, filler)).bound;
      if (b <= prev) return {false, "not increasing at n=" + std::to_string(n)};
      prev = b;
    }
    return {true, "bound = ceil((n+6)/7) for n = 1..50, reaching " + std::to_string(prev)};
  });

  criterion(4, "quasimorphism defect", 30.0, [&]() -> Outcome {
    SamplerConfig cfg;
    cfg.max_length = 40;
    std::string detail;
    bool ok = true;
    for (const auto& [name, p] : {std::pair<const char*, Presentation>{"bs:2,3", bs}, {"zz", zz}, {"z3z", z3z}}) {
      const auto r = verify_quasimorphism(p, cfg, 100000);
      ok = ok && r.ok() && r.trials == 100000;
      detail += std::string(detail.empty() ? "" : "; ") + name + ": " + report_detail(r);
    }
    return {ok, detail};
  });

  criterion(5, "palindrome delta bounds", 120.0, [&]() -> Outcome {
    EnumerationConfig cfg;
    cfg.max_length = 9;
    cfg.exponent_bound = 3;
    const auto h = verify_palindrome_delta(bs, cfg);
    const auto a = verify_palindrome_delta(zz, cfg);
    const bool ok = h.violations == 0 && a.violations == 0 && h.allowed == 1 && a.allowed == 3 &&
                    h.palindromes > 0 && a.palindromes > 0;
    return {ok, "bs:2,3: " + std::to_string(h.palindromes) + " palindromes, max delta " +
                    std::to_string(h.max_delta) + "; zz: " + std::to_string(a.palindromes) +
                    " palindromes, max delta " + std::to_string(a.max_delta) + h.first_violation +
                    a.first_violation};
  });

  criterion(6, "signature survives pinch insertions", 0, [&]() -> Outcome {
    SamplerConfig cfg;
    const auto r = verify_signature(bs, cfg, 10000);
    return {r.ok() && r.trials == 10000, report_detail(r)};
  });

  criterion(7, "d_k antisymmetry under inversion", 0, [&]() -> Outcome {
    SamplerConfig cfg;
    const auto h = verify_inverse_dk(bs, cfg, 10000);
    const auto a = verify_inverse_dk(zz, cfg, 10000);
    const auto b = verify_inverse_dk(z3z, cfg, 10000);
    return {h.ok() && a.ok() && b.ok() && h.trials + a.trials + b.trials == 30000,
            "bs:2,3: " + report_detail(h) + "; zz: " + report_detail(a) + "; z3z: " + report_detail(b)};
  });

  criterion(8, "index-two decomposition in z4z2z4", 60.0, [&]() -> Outcome {
    const CosetReps reps = index_two_reps(z4);
    std::vector<AmalgamWord> words{{}};
    for (int e = 1; e < 4; ++e) {
      words.push_back({{Factor::A, Element::scalar(e)}});
      words.push_back({{Factor::B, Element::scalar(e)}});
    }
    std::vector<AmalgamWord> frontier;
    for (Factor f : {Factor::A, Factor::B}) {
      for (int e : {1, 3}) frontier.push_back({{f, Element::scalar(e)}});
    }
    for (int len = 2; len <= 12; ++len) {
      std::vector<AmalgamWord> next;
      for (const auto& w : frontier) {
        for (int e : {1, 3}) {
          AmalgamWord v = w;
          v.push_back({other(w.back().factor), Element::scalar(e)});
          next.push_back(std::move(v));
        }
      }
      words.insert(words.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    std::size_t bad = 0;
    std::string first;
    for (const auto& w : words) {
      const auto pieces = index_two_decompose(z4, w, reps);
      AmalgamWord product;
      bool ok = pieces.size() <= 3;
      for (const auto& p : pieces) {
        ok = ok && is_group_palindrome_amalgam(z4, p);
        product = amalgam_concat(product, p);
      }
      ok = ok && amalgam_word_equal(z4, product, w);
      if (!ok) {
        if (first.empty()) first = ", first: " + format_amalgam_word(z4, w);
        ++bad;
      }
    }
    return {bad == 0, std::to_string(words.size()) + " words, " + std::to_string(bad) + " violations" + first};
  });

  criterion(9, "oracle consistency", 0, [&]() -> Outcome {
    EnumerationConfig cfg;
    cfg.max_length = 7;
    cfg.depth = 4;
    cfg.exponent_bound = 1;
    std::string detail;
    bool ok = true;
    for (const auto& [name, p] : {std::pair<const char*, Presentation>{"zz", zz}, {"bs:2,3", bs}}) {
      const auto r = cross_check(p, cfg);
      ok = ok && r.violations() == 0 && r.resolved > 0;
      detail += std::string(detail.empty() ? "" : "; ") + name + ": " + std::to_string(r.records.size()) +
                " elements, " + std::to_string(r.resolved) + " resolved, " + std::to_string(r.violations()) +
                " violations";
    }
    return {ok, detail};
  });

  return failures == 0 ? 0 : 1;
}
