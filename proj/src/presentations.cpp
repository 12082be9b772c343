#include "palinwidth/presentations.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "palinwidth/errors.hpp"
#include "palinwidth/spec_json.hpp"

namespace palinwidth {

HnnPresentation baumslag_solitar(std::int64_t m, std::int64_t n) {
  if (m < 2 || n < 2) throw UsageError("bs:M,N needs M, N >= 2");
  return HnnPresentation(GroupSpec::integer("a"), SubgroupSpec::index(m), SubgroupSpec::index(n),
                         IsoSpec::index_pair(m, n));
}

AmalgamPresentation free_product_zz() {
  AmalgamPresentation pres(GroupSpec::integer("a"), GroupSpec::integer("b"), SubgroupSpec::trivial(),
                           SubgroupSpec::trivial(),
                           IsoSpec::from_pairs({{Element::scalar(0), Element::scalar(0)}}));
  pres.set_distinguished(Factor::A, Element::scalar(1));
  return pres;
}

AmalgamPresentation amalgam_z3z() {
  AmalgamPresentation pres(GroupSpec::integer("a"), GroupSpec::integer("b"), SubgroupSpec::index(3),
                           SubgroupSpec::index(3), IsoSpec::index_pair(3, 3));
  pres.set_distinguished(Factor::A, Element::scalar(1));
  return pres;
}

AmalgamPresentation amalgam_z4z2z4() {
  AmalgamPresentation pres(GroupSpec::cyclic(4, "x"), GroupSpec::cyclic(4, "y"), SubgroupSpec::index(2),
                           SubgroupSpec::index(2),
                           IsoSpec::from_pairs({{Element::scalar(0), Element::scalar(0)},
                                                {Element::scalar(2), Element::scalar(2)}}));
  pres.set_distinguished(Factor::A, Element::scalar(1));
  return pres;
}

Presentation load_presentation(std::string_view source) {
  const std::string s(source);
  if (s == "zz") return free_product_zz();
  if (s == "z3z") return amalgam_z3z();
  if (s == "z4z2z4") return amalgam_z4z2z4();
  static const std::regex bs(R"(bs:(-?\d+),(-?\d+))");
  std::smatch m;
  if (std::regex_match(s, m, bs)) {
    try {
      return baumslag_solitar(std::stoll(m[1]), std::stoll(m[2]));
    } catch (const std::out_of_range&) {
      throw UsageError("Baumslag-Solitar parameter out of range in '" + s + "'");
    }
  }
  if (s.rfind("bs:", 0) == 0) throw UsageError("expected bs:M,N");
  std::ifstream in(s);
  if (!in) throw UsageError("unknown presentation '" + s + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("cannot parse " + s + ": " + e.what());
  }
  return presentation_from_json(j);
}

}  // namespace palinwidth
