#include "palinwidth/word_io.hpp"

#include <cctype>
#include <set>

#include "palinwidth/errors.hpp"

namespace palinwidth {

namespace {

constexpr long long kMaxStableExponent = 1000000;

struct Token {
  std::string_view prefix;  // factor tag, empty if absent
  std::string_view name;
  BigInt exponent = 1;
};

Token split_token(std::string_view tok) {
  Token out;
  const auto colon = tok.find(':');
  if (colon != std::string_view::npos) {
    out.prefix = tok.substr(0, colon);
    tok = tok.substr(colon + 1);
  }
  const auto caret = tok.find('^');
  out.name = tok.substr(0, caret);
  if (out.name.empty()) throw UsageError("empty letter name");
  if (caret != std::string_view::npos) {
    std::string digits(tok.substr(caret + 1));
    const std::size_t start = !digits.empty() && (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    if (start == digits.size()) throw UsageError("missing exponent in '" + std::string(tok) + "'");
    for (std::size_t i = start; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
        throw UsageError("bad exponent in '" + std::string(tok) + "'");
      }
    }
    if (digits[0] == '+') digits.erase(0, 1);
    out.exponent = BigInt(digits);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::set<std::string> letter_names(const Group& g) {
  const auto& spec = g.spec();
  if (spec.kind == GroupKind::FiniteTable) return {spec.names.begin(), spec.names.end()};
  return {spec.generators.begin(), spec.generators.end()};
}

}  // namespace

std::vector<std::string_view> word_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  const auto sep = [&](std::size_t j) {
    return std::isspace(static_cast<unsigned char>(text[j])) || text[j] == '*';
  };
  while (i < text.size()) {
    while (i < text.size() && sep(i)) ++i;
    std::size_t j = i;
    while (j < text.size() && !sep(j)) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

HnnWord parse_hnn_word(const HnnPresentation& pres, std::string_view text) {
  const Group& g = pres.base();
  HnnWord w{{g.identity()}, {}};
  for (auto raw : word_tokens(text)) {
    if (raw == "1") continue;
    const Token tok = split_token(raw);
    if (!tok.prefix.empty()) throw UsageError("factor tags are not valid in HNN words");
    if (tok.name == pres.stable()) {
      if (tok.exponent > kMaxStableExponent || tok.exponent < -kMaxStableExponent) {
        throw UsageError("stable-letter exponent too large");
      }
      const int e = tok.exponent > 0 ? 1 : -1;
      for (BigInt i = 0; i < abs(tok.exponent); ++i) {
        w.exps.push_back(e);
        w.bases.push_back(g.identity());
      }
      continue;
    }
    const auto letter = g.letter(tok.name);
    if (!letter) throw UsageError("unknown letter '" + std::string(tok.name) + "'");
    w.bases.back() = g.multiply(w.bases.back(), g.power(*letter, tok.exponent));
  }
  return w;
}

std::string format_hnn_word(const HnnPresentation& pres, const HnnWord& w) {
  const Group& g = pres.base();
  std::vector<std::string> parts = g.format_tokens(w.bases.front());
  std::size_t i = 0;
  while (i < w.exps.size()) {
    std::size_t j = i + 1;
    while (j < w.exps.size() && w.exps[j] == w.exps[i] && g.is_identity(w.bases[j])) ++j;
    const long long k = static_cast<long long>(j - i) * w.exps[i];
    parts.push_back(k == 1 ? pres.stable() : pres.stable() + "^" + std::to_string(k));
    for (auto& tok : g.format_tokens(w.bases[j])) parts.push_back(std::move(tok));
    i = j;
  }
  return join(parts);
}

AmalgamWord parse_amalgam_word(const AmalgamPresentation& pres, std::string_view text) {
  AmalgamWord w;
  for (auto raw : word_tokens(text)) {
    if (raw == "1") continue;
    const Token tok = split_token(raw);
    std::optional<Factor> factor;
    std::optional<Element> base;
    if (!tok.prefix.empty()) {
      if (tok.prefix == "A") {
        factor = Factor::A;
      } else if (tok.prefix == "B") {
        factor = Factor::B;
      } else {
        throw UsageError("unknown factor tag '" + std::string(tok.prefix) + "'");
      }
      base = pres.factor(*factor).letter(tok.name);
    } else {
      for (Factor f : {Factor::A, Factor::B}) {
        if (auto l = pres.factor(f).letter(tok.name)) {
          if (factor) throw UsageError("letter '" + std::string(tok.name) + "' is ambiguous; tag it");
          factor = f;
          base = l;
        }
      }
    }
    if (!base) throw UsageError("unknown letter '" + std::string(tok.name) + "'");
    const Group& g = pres.factor(*factor);
    const Element x = g.power(*base, tok.exponent);
    if (!w.empty() && w.back().factor == *factor) {
      w.back().x = g.multiply(w.back().x, x);
    } else {
      w.push_back({*factor, x});
    }
  }
  return w;
}

std::string format_amalgam_word(const AmalgamPresentation& pres, const AmalgamWord& w) {
  const auto names_a = letter_names(pres.factor(Factor::A));
  const auto names_b = letter_names(pres.factor(Factor::B));
  bool tagged = false;
  for (const auto& n : names_a) tagged = tagged || names_b.count(n) != 0;
  std::vector<std::string> parts;
  for (const auto& s : w) {
    auto tokens = pres.factor(s.factor).format_tokens(s.x);
    if (tokens.empty()) tokens.push_back("1");
    for (auto& t : tokens) {
      if (tagged && t != "1") t = (s.factor == Factor::A ? "A:" : "B:") + t;
      parts.push_back(std::move(t));
    }
  }
  return join(parts);
}

}  // namespace palinwidth
