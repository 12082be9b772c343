#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "palinwidth/amalgam.hpp"
#include "palinwidth/hnn.hpp"

namespace palinwidth {

/// Splits on whitespace and `*`.
std::vector<std::string_view> word_tokens(std::string_view text);

/// `t`, `t^k` and base tokens `gen`, `gen^k`; the empty string is the identity.
HnnWord parse_hnn_word(const HnnPresentation& pres, std::string_view text);
/// Exponent-collapsed; runs of equal stable letters with identity bases
/// between them print as t^k.
std::string format_hnn_word(const HnnPresentation& pres, const HnnWord& w);

/// Syllable tokens `A:gen^k` / `B:gen^k`, or bare `gen^k` when the name is
/// unambiguous. Adjacent tokens of one factor merge into a single syllable.
AmalgamWord parse_amalgam_word(const AmalgamPresentation& pres, std::string_view text);
std::string format_amalgam_word(const AmalgamPresentation& pres, const AmalgamWord& w);

}  // namespace palinwidth
