#include "palinwidth/spec_json.hpp"

#include "palinwidth/errors.hpp"

namespace palinwidth {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const json& j) {
  if (!j.is_array()) throw UsageError("expected a list of names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw UsageError("expected a list of names");
    out.push_back(e.get<std::string>());
  }
  return out;
}

bool is_trivial_spec(const SubgroupSpec& s) { return s.kind == SubgroupSpec::Kind::Trivial; }

IsoSpec iso_or_trivial(const Group& from, const SubgroupSpec& source, const Group& to,
                       const SubgroupSpec& target, const json& j, const char* key) {
  if (!j.contains(key) && is_trivial_spec(source) && is_trivial_spec(target)) {
    return IsoSpec::from_pairs({{from.identity(), to.identity()}});
  }
  return iso_from_json(from, to, field(j, key));
}

}  // namespace

GroupSpec group_spec_from_json(const json& j) {
  try {
    const json& kind = field(j, "kind");
    std::vector<std::string> gens;
    if (j.contains("generators")) gens = string_list(j.at("generators"));
    if (kind.is_string()) {
      if (kind.get<std::string>() != "integer") throw UsageError("unknown group kind");
      GroupSpec s = GroupSpec::integer();
      if (!gens.empty()) s.generators = gens;
      return s;
    }
    if (kind.contains("cyclic")) {
      GroupSpec s = GroupSpec::cyclic(kind.at("cyclic").get<std::int64_t>());
      if (!gens.empty()) s.generators = gens;
      return s;
    }
    if (kind.contains("free")) return GroupSpec::free(kind.at("free").get<std::size_t>(), gens);
    if (kind.contains("finite_table")) {
      const json& ft = kind.at("finite_table");
      auto table = field(ft, "table").get<std::vector<std::vector<std::size_t>>>();
      if (ft.contains("size") && ft.at("size").get<std::size_t>() != table.size()) {
        throw UsageError("finite_table size does not match the table");
      }
      return GroupSpec::finite_table(std::move(table), string_list(field(ft, "names")), gens);
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad group spec: ") + e.what());
  }
  throw UsageError("unknown group kind");
}

Element element_from_json(const Group& g, const json& j) {
  if (j.is_string()) return g.parse(j.get<std::string>());
  if (j.is_number_integer()) {
    if (g.kind() == GroupKind::Integer) return Element::scalar(j.get<std::int64_t>());
    if (g.kind() == GroupKind::Cyclic) return g.power(g.generator(0), j.get<std::int64_t>());
  }
  throw UsageError("bad element " + j.dump());
}

SubgroupSpec subgroup_from_json(const Group& g, const json& j) {
  SubgroupSpec s;
  try {
    if (j.is_string() && j.get<std::string>() == "trivial") {
      s = SubgroupSpec::trivial();
    } else if (j.is_object() && j.contains("index")) {
      s = SubgroupSpec::index(j.at("index").get<std::int64_t>());
    } else if (j.is_object() && j.contains("elements")) {
      std::vector<Element> elems;
      for (const auto& e : j.at("elements")) elems.push_back(element_from_json(g, e));
      s = SubgroupSpec::element_list(std::move(elems));
    } else if (j.is_object() && j.contains("cyclic_generated")) {
      s = SubgroupSpec::cyclic_generated(element_from_json(g, j.at("cyclic_generated")));
    } else {
      throw UsageError("bad subgroup spec " + j.dump());
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad subgroup spec: ") + e.what());
  }
  g.validate(s);
  return s;
}

IsoSpec iso_from_json(const Group& from, const Group& to, const json& j) {
  try {
    if (j.is_object() && j.contains("index_pair")) {
      const auto& p = j.at("index_pair");
      if (!p.is_array() || p.size() != 2) throw UsageError("index_pair needs [m, n]");
      return IsoSpec::index_pair(p[0].get<std::int64_t>(), p[1].get<std::int64_t>());
    }
    if (j.is_object() && j.contains("pairs")) {
      std::vector<std::pair<Element, Element>> pairs;
      for (const auto& p : j.at("pairs")) {
        if (!p.is_array() || p.size() != 2) throw UsageError("iso pairs must be [source, target]");
        pairs.emplace_back(element_from_json(from, p[0]), element_from_json(to, p[1]));
      }
      return IsoSpec::from_pairs(std::move(pairs));
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad isomorphism spec: ") + e.what());
  }
  throw UsageError("bad isomorphism spec " + j.dump());
}

Presentation presentation_from_json(const json& j) {
  if (j.is_object() && j.contains("base")) {
    const GroupSpec base_spec = group_spec_from_json(j.at("base"));
    const Group base(base_spec);
    const SubgroupSpec a = subgroup_from_json(base, field(j, "A"));
    const SubgroupSpec b = subgroup_from_json(base, field(j, "B"));
    const IsoSpec phi = iso_or_trivial(base, a, base, b, j, "phi");
    const std::string stable = j.contains("stable") ? j.at("stable").get<std::string>() : "t";
    return HnnPresentation(base_spec, a, b, phi, stable);
  }
  if (j.is_object() && j.contains("factorA")) {
    const GroupSpec sa = group_spec_from_json(j.at("factorA"));
    const GroupSpec sb = group_spec_from_json(field(j, "factorB"));
    const Group ga(sa);
    const Group gb(sb);
    const SubgroupSpec ca = subgroup_from_json(ga, field(j, "C_in_A"));
    const SubgroupSpec cb = subgroup_from_json(gb, field(j, "C_in_B"));
    AmalgamPresentation pres(sa, sb, ca, cb, iso_or_trivial(ga, ca, gb, cb, j, "identify"));
    const auto tagged = [&](const json& t) {
      const std::string f = field(t, "factor").get<std::string>();
      if (f != "A" && f != "B") throw UsageError("factor must be \"A\" or \"B\"");
      const Factor factor = f == "A" ? Factor::A : Factor::B;
      return Syllable{factor, element_from_json(pres.factor(factor), field(t, "element"))};
    };
    if (j.contains("a")) {
      const Syllable a = tagged(j.at("a"));
      pres.set_distinguished(a.factor, a.x);
    }
    if (j.contains("b")) pres.set_partner(tagged(j.at("b")));
    return pres;
  }
  throw UsageError("presentation JSON needs \"base\" (HNN) or \"factorA\" (amalgam)");
}

}  // namespace palinwidth
