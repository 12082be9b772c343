#include "palinwidth/oracle.hpp"

#include <json.hpp>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "palinwidth/errors.hpp"
#include "palinwidth/word_io.hpp"

namespace palinwidth {

namespace {

void check_cap(std::size_t size, const EnumerationConfig& cfg) {
  if (size > cfg.cap) throw ResourceError("enumeration exceeds the cap of " + std::to_string(cfg.cap));
}

std::vector<Element> letters_with_identity(const Group& g, int bound) {
  std::vector<Element> out{g.identity()};
  for (auto& x : g.alphabet(bound)) out.push_back(std::move(x));
  return out;
}

// ---------------------------------------------------------------------------
// HNN

std::string key_of(const HnnPresentation& pres, const HnnWord& w) {
  return format_hnn_word(pres, hnn_normal_form(pres, w));
}

void grow_hnn(const HnnPresentation& pres, const std::vector<Element>& letters, const EnumerationConfig& cfg,
              HnnWord& w, std::vector<HnnWord>& out) {
  out.push_back(w);
  check_cap(out.size(), cfg);
  if (w.exps.size() >= cfg.max_length) return;
  const Group& g = pres.base();
  for (int e : {1, -1}) {
    if (!w.exps.empty() && w.exps.back() == -e && g.contains(pres.pinch_subgroup(e), w.bases.back())) {
      continue;
    }
    const SubgroupSpec& sub = e > 0 ? pres.b() : pres.a();
    for (const auto& x : letters) {
      if (g.right_coset_split(sub, x).rep != x) continue;
      w.exps.push_back(e);
      w.bases.push_back(x);
      grow_hnn(pres, letters, cfg, w, out);
      w.exps.pop_back();
      w.bases.pop_back();
    }
  }
}

// Outside-in search for reduced words g0 t^e1 ... t^en gn with w = reverse(w).
// Writing u_i for the base element between t^-e_{n+1-i} and t^e_i in
// reverse(w)^-1 w, each u_i must pinch: u_1 = gn^-1 g0,
// u_{i+1} = g_{n-i}^-1 img(u_i) g_i, and g0^-1 img(u_n) gn = 1. The chain is
// followed forward from the outside and backward from the final condition.
class HnnPalindromeSearch {
 public:
  HnnPalindromeSearch(const HnnPresentation& pres, const EnumerationConfig& cfg)
      : pres_(pres), g_(pres.base()), cfg_(cfg), letters_(letters_with_identity(g_, cfg.exponent_bound)) {}

  std::vector<HnnWord> run() {
    for (std::size_t n = 0; n <= cfg_.max_length; ++n) {
      n_ = n;
      w_.bases.assign(n + 1, g_.identity());
      w_.exps.assign(n, 1);
      fwd_img_.assign(n + 2, g_.identity());
      bwd_u_.assign(n + 2, g_.identity());
      if (n == 0) {
        for (const auto& x : letters_) {
          w_.bases[0] = x;
          emit();
        }
        continue;
      }
      search(0);
    }
    return std::move(found_);
  }

 private:
  // e_i, 1-based.
  int& e(std::size_t i) { return w_.exps[i - 1]; }

  bool in_pinch(int s, const Element& x) const { return g_.contains(pres_.pinch_subgroup(s), x); }
  bool in_image(int s, const Element& x) const { return g_.contains(pres_.pinch_subgroup(-s), x); }
  Element img(int s, const Element& x) const {
    return pres_.phi().apply(s > 0 ? Direction::Forward : Direction::Backward, x);
  }
  Element img_inv(int s, const Element& x) const {
    return pres_.phi().apply(s > 0 ? Direction::Backward : Direction::Forward, x);
  }

  bool pinch_at(std::size_t i) {
    if (i == 0 || i >= n_) return false;
    return e(i) == -e(i + 1) && in_pinch(e(i + 1), w_.bases[i]);
  }

  // Chain checks once pair d = (g_d, g_{n-d}) and e_{d+1} are fixed.
  bool chains_hold(std::size_t d) {
    const auto& g = w_.bases;
    if (d + 1 <= n_) {
      const int s = e(d + 1);
      const Element u = d == 0 ? g_.multiply(g_.invert(g[n_]), g[0])
                               : g_.multiply(g_.multiply(g_.invert(g[n_ - d]), fwd_img_[d]), g[d]);
      if (!in_pinch(s, u)) return false;
      fwd_img_[d + 1] = img(s, u);
    }
    if (n_ >= d + 1) {
      const std::size_t i = n_ - d;
      const int s = e(i);
      const Element im = d == 0 ? g_.multiply(g[0], g_.invert(g[n_]))
                                : g_.multiply(g_.multiply(g[d], bwd_u_[i + 1]), g_.invert(g[n_ - d]));
      if (!in_image(s, im)) return false;
      bwd_u_[i] = img_inv(s, im);
    }
    return true;
  }

  void search(std::size_t d) {
    if (2 * d > n_) {
      emit();
      return;
    }
    const bool choose_sign = 2 * (d + 1) <= n_ + 1;
    for (int s : {1, -1}) {
      if (choose_sign) {
        e(d + 1) = s;
        e(n_ - d) = s;
      } else if (s == -1) {
        break;
      }
      for (const auto& x : letters_) {
        w_.bases[d] = x;
        for (const auto& y : letters_) {
          if (n_ - d == d && y != x) continue;
          w_.bases[n_ - d] = y;
          if (pinch_at(d) || pinch_at(n_ - d)) continue;
          if (!chains_hold(d)) continue;
          search(d + 1);
        }
      }
    }
  }

  void emit() {
    if (!is_group_palindrome_hnn(pres_, w_)) return;
    HnnWord nf = hnn_normal_form(pres_, w_);
    if (seen_.insert(format_hnn_word(pres_, nf)).second) {
      found_.push_back(std::move(nf));
      check_cap(found_.size(), cfg_);
    }
  }

  const HnnPresentation& pres_;
  const Group& g_;
  const EnumerationConfig& cfg_;
  std::vector<Element> letters_;
  std::size_t n_ = 0;
  HnnWord w_;
  std::vector<Element> fwd_img_;
  std::vector<Element> bwd_u_;
  std::set<std::string> seen_;
  std::vector<HnnWord> found_;
};

// ---------------------------------------------------------------------------
// Amalgam

std::string key_of(const AmalgamPresentation& pres, const AmalgamWord& w) {
  return format_amalgam_word(pres, amalgam_normal_form(pres, w));
}

void grow_amalgam(const AmalgamPresentation& pres, const std::vector<Element> (&letters)[2],
                  const EnumerationConfig& cfg, AmalgamWord& w, std::vector<AmalgamWord>& out) {
  if (w.size() >= cfg.max_length) return;
  const Factor f = other(w.back().factor);
  const Group& g = pres.factor(f);
  for (const auto& x : letters[static_cast<int>(f)]) {
    w.push_back({f, x});
    out.push_back(w);
    check_cap(out.size(), cfg);
    if (g.left_coset_split(pres.c(f), x).rep == x) grow_amalgam(pres, letters, cfg, w, out);
    w.pop_back();
  }
}

// Reduced words x1 ... xn (n odd) with reverse(w)^-1 w = 1. The C-elements
// c_i = x_{n+1-i}^-1 c_{i-1} x_i (c_0 = 1) must all lie in C with c_n = 1.
class AmalgamPalindromeSearch {
 public:
  AmalgamPalindromeSearch(const AmalgamPresentation& pres, const EnumerationConfig& cfg)
      : pres_(pres), cfg_(cfg) {
    for (Factor f : {Factor::A, Factor::B}) {
      for (const auto& x : pres.factor(f).alphabet(cfg.exponent_bound)) {
        all_[static_cast<int>(f)].push_back(x);
        if (!pres.factor(f).contains(pres.c(f), x)) outside_[static_cast<int>(f)].push_back(x);
      }
    }
  }

  std::vector<AmalgamWord> run() {
    const Group& ga = pres_.factor(Factor::A);
    w_.clear();
    emit();
    if (cfg_.max_length >= 1) {
      for (Factor f : {Factor::A, Factor::B}) {
        for (const auto& x : all_[static_cast<int>(f)]) {
          w_ = {{f, x}};
          emit();
        }
      }
    }
    for (std::size_t n = 3; n <= cfg_.max_length; n += 2) {
      n_ = n;
      for (Factor first : {Factor::A, Factor::B}) {
        w_.assign(n, Syllable{});
        for (std::size_t i = 0; i < n; ++i) w_[i].factor = i % 2 == 0 ? first : other(first);
        fwd_.assign(n + 1, ga.identity());
        bwd_.assign(n + 2, ga.identity());
        search(0);
      }
    }
    return std::move(found_);
  }

 private:
  // c_i in factor A coordinates, 1-based positions.
  std::optional<Element> step(std::size_t i, const Element& c_prev, bool forward) {
    const Syllable& xi = w_[i - 1];
    const Syllable& xm = w_[n_ - i];
    const Group& g = pres_.factor(xi.factor);
    const Element c = pres_.transport(c_prev, Factor::A, xi.factor);
    const Element r = forward ? g.multiply(g.multiply(g.invert(xm.x), c), xi.x)
                              : g.multiply(g.multiply(xm.x, c), g.invert(xi.x));
    if (!g.contains(pres_.c(xi.factor), r)) return std::nullopt;
    return pres_.transport(r, xi.factor, Factor::A);
  }

  void search(std::size_t d) {
    if (2 * d >= n_) {
      emit();
      return;
    }
    const auto& lx = outside_[static_cast<int>(w_[d].factor)];
    for (const auto& x : lx) {
      w_[d].x = x;
      for (const auto& y : lx) {
        if (n_ - 1 - d == d && y != x) continue;
        w_[n_ - 1 - d].x = y;
        // Forward c_{d+1} uses pair d; backward c_{n-1-d} uses pair d too.
        auto f = step(d + 1, fwd_[d], true);
        if (!f) continue;
        fwd_[d + 1] = *f;
        auto b = step(n_ - d, bwd_[n_ - d], false);
        if (!b) continue;
        bwd_[n_ - d - 1] = *b;
        search(d + 1);
      }
    }
  }

  void emit() {
    if (!is_group_palindrome_amalgam(pres_, w_)) return;
    AmalgamWord nf = amalgam_normal_form(pres_, w_);
    if (seen_.insert(format_amalgam_word(pres_, nf)).second) {
      found_.push_back(std::move(nf));
      check_cap(found_.size(), cfg_);
    }
  }

  const AmalgamPresentation& pres_;
  const EnumerationConfig& cfg_;
  std::vector<Element> all_[2];
  std::vector<Element> outside_[2];
  std::size_t n_ = 0;
  AmalgamWord w_;
  std::vector<Element> fwd_;
  std::vector<Element> bwd_;
  std::set<std::string> seen_;
  std::vector<AmalgamWord> found_;
};

// ---------------------------------------------------------------------------
// Shared cross-check

std::size_t length_of(const HnnPresentation& pres, const HnnWord& w) {
  return britton_reduce(pres, w).exps.size();
}
std::size_t length_of(const AmalgamPresentation& pres, const AmalgamWord& w) {
  return syllable_length(pres, w);
}
bool is_pal(const HnnPresentation& pres, const HnnWord& w) { return is_group_palindrome_hnn(pres, w); }
bool is_pal(const AmalgamPresentation& pres, const AmalgamWord& w) {
  return is_group_palindrome_amalgam(pres, w);
}
LowerBoundCertificate bound_of(const HnnPresentation& pres, const HnnWord& w) {
  return pal_lower_bound_hnn(pres, w);
}
LowerBoundCertificate bound_of(const AmalgamPresentation& pres, const AmalgamWord& w) {
  return pal_lower_bound_amalgam(pres, w);
}
HnnWord product(const HnnPresentation& pres, const HnnWord& x, const HnnWord& y) {
  return hnn_concat(pres, x, y);
}
AmalgamWord product(const AmalgamPresentation&, const AmalgamWord& x, const AmalgamWord& y) {
  return amalgam_concat(x, y);
}
std::int64_t palindrome_delta_limit(const HnnPresentation&) { return 1; }
std::int64_t palindrome_delta_limit(const AmalgamPresentation&) { return 3; }

template <class Pres>
OracleReport cross_check_impl(const Pres& pres, const EnumerationConfig& cfg) {
  const auto ball = enumerate_elements(pres, cfg);
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> keys;
  for (const auto& w : ball) {
    keys.push_back(key_of(pres, w));
    index.emplace(keys.back(), keys.size() - 1);
  }
  std::vector<bool> pal(ball.size(), false);
  for (std::size_t i = 0; i < ball.size(); ++i) pal[i] = is_pal(pres, ball[i]);
  for (const auto& p : enumerate_group_palindromes(pres, cfg)) {
    auto it = index.find(key_of(pres, p));
    if (it != index.end()) pal[it->second] = true;
  }
  std::vector<std::size_t> pals;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (pal[i]) pals.push_back(i);
  }

  // ball.front() is the identity.
  std::vector<int> dist(ball.size(), -1);
  dist[0] = 0;
  std::vector<std::size_t> frontier{0};
  for (int k = 1; k <= cfg.depth && !frontier.empty(); ++k) {
    std::vector<std::size_t> next;
    for (std::size_t gi : frontier) {
      for (std::size_t pi : pals) {
        auto it = index.find(key_of(pres, product(pres, ball[gi], ball[pi])));
        if (it == index.end() || dist[it->second] != -1) continue;
        dist[it->second] = k;
        next.push_back(it->second);
      }
    }
    frontier = std::move(next);
  }

  OracleReport report;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    OracleRecord r;
    r.word = keys[i];
    r.length = length_of(pres, ball[i]);
    r.palindrome = pal[i];
    if (dist[i] >= 0) r.exact_pl = dist[i];
    const LowerBoundCertificate cert = bound_of(pres, ball[i]);
    r.delta = cert.delta;
    r.lower_bound = cert.bound;
    if (r.palindrome) {
      ++report.palindromes;
      report.max_palindrome_delta = std::max(report.max_palindrome_delta, r.delta);
      if (r.delta > palindrome_delta_limit(pres)) ++report.palindrome_delta_violations;
    }
    if (r.exact_pl) {
      ++report.resolved;
      if (r.lower_bound > *r.exact_pl) ++report.bound_violations;
    }
    report.records.push_back(std::move(r));
  }
  return report;
}

template <class Pres>
PalindromeDeltaReport palindrome_delta_impl(const Pres& pres, const EnumerationConfig& cfg) {
  PalindromeDeltaReport report;
  report.allowed = palindrome_delta_limit(pres);
  for (const auto& p : enumerate_group_palindromes(pres, cfg)) {
    ++report.palindromes;
    const std::int64_t d = bound_of(pres, p).delta;
    report.max_delta = std::max(report.max_delta, d);
    if (d > report.allowed && report.violations++ == 0) report.first_violation = key_of(pres, p);
  }
  return report;
}

}  // namespace

std::vector<HnnWord> enumerate_elements(const HnnPresentation& pres, const EnumerationConfig& cfg) {
  std::vector<HnnWord> out;
  const auto letters = letters_with_identity(pres.base(), cfg.exponent_bound);
  for (const auto& g0 : letters) {
    HnnWord w{{g0}, {}};
    grow_hnn(pres, letters, cfg, w, out);
  }
  return out;
}

std::vector<AmalgamWord> enumerate_elements(const AmalgamPresentation& pres, const EnumerationConfig& cfg) {
  std::vector<AmalgamWord> out{AmalgamWord{}};
  if (cfg.max_length == 0) return out;
  std::vector<Element> outside[2];
  std::set<std::string> singles;
  for (Factor f : {Factor::A, Factor::B}) {
    const Group& g = pres.factor(f);
    for (const auto& x : g.alphabet(cfg.exponent_bound)) {
      const AmalgamWord w = amalgam_normal_form(pres, {{f, x}});
      if (singles.insert(format_amalgam_word(pres, w)).second) out.push_back(w);
      if (!g.contains(pres.c(f), x)) outside[static_cast<int>(f)].push_back(x);
    }
  }
  for (Factor f : {Factor::A, Factor::B}) {
    const Group& g = pres.factor(f);
    for (const auto& x : outside[static_cast<int>(f)]) {
      if (g.left_coset_split(pres.c(f), x).rep != x) continue;
      AmalgamWord w{{f, x}};
      grow_amalgam(pres, outside, cfg, w, out);
    }
  }
  check_cap(out.size(), cfg);
  return out;
}

std::vector<HnnWord> enumerate_group_palindromes(const HnnPresentation& pres, const EnumerationConfig& cfg) {
  return HnnPalindromeSearch(pres, cfg).run();
}

std::vector<AmalgamWord> enumerate_group_palindromes(const AmalgamPresentation& pres,
                                                     const EnumerationConfig& cfg) {
  return AmalgamPalindromeSearch(pres, cfg).run();
}

OracleReport cross_check(const Presentation& pres, const EnumerationConfig& cfg) {
  return std::visit([&](const auto& p) { return cross_check_impl(p, cfg); }, pres);
}

PalindromeDeltaReport verify_palindrome_delta(const Presentation& pres, const EnumerationConfig& cfg) {
  return std::visit([&](const auto& p) { return palindrome_delta_impl(p, cfg); }, pres);
}

std::string to_json_line(const OracleRecord& r) {
  nlohmann::ordered_json j;
  j["word"] = r.word;
  j["length"] = r.length;
  j["palindrome"] = r.palindrome;
  j["exact_pl"] = r.exact_pl ? nlohmann::ordered_json(*r.exact_pl) : nlohmann::ordered_json(nullptr);
  j["delta"] = r.delta;
  j["lower_bound"] = r.lower_bound;
  return j.dump();
}

}  // namespace palinwidth
