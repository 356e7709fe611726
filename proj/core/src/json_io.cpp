#include "slcinv/json_io.hpp"

#include <algorithm>
#include <limits>

#include "json.hpp"
#include "slcinv/error.hpp"

namespace slcinv {

using nlohmann::json;

namespace {

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    // nlohmann prefixes "[json.exception.parse_error.101] parse error at ..."
    if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw Error(Errc::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw Error(Errc::SchemaError, where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(Errc::MissingField, where + " lacks \"" + key + "\"");
  return *it;
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw Error(Errc::SchemaError, where + ": \"" + key + "\" has the wrong type");
  }
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_array()) throw Error(Errc::SchemaError, where + ": \"" + key + "\" must be an array");
  return v;
}

json bigint_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt bigint_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return BigInt(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(Errc::SchemaError, where + ": expected an integer");
}

json abelian_to_json(const AbelianGroup& a) {
  json torsion = json::array();
  for (const auto& d : a.torsion) torsion.push_back(bigint_to_json(d));
  return json{{"rank", a.free_rank}, {"torsion", torsion}};
}

AbelianGroup abelian_from_json(const json& v, const std::string& where) {
  auto rank = get<std::size_t>(v, "rank", where);
  std::vector<BigInt> orders;
  if (v.contains("torsion")) {
    const json& t = array_field(v, "torsion", where);
    for (const auto& d : t) orders.push_back(bigint_from_json(d, where));
  }
  for (const auto& d : orders)
    if (d < 0) throw Error(Errc::SchemaError, where + ": negative torsion order");
  return AbelianGroup::from_cyclic_orders(rank, orders);
}

IdPair pair_from_json(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
    throw Error(Errc::SchemaError, where + ": expected a pair of ids");
  return {v[0].get<std::string>(), v[1].get<std::string>()};
}

json gluing_to_value(const GluingData& g) {
  json normal = json::array();
  for (const auto& n : g.normalization) {
    json c{{"id", n.id},
           {"chi_O", n.chi_O},
           {"q", n.q},
           {"simply_connected", n.simply_connected},
           {"h1", abelian_to_json(n.h1)},
           {"h2_rank", n.h2_rank},
           {"h3", abelian_to_json(n.h3)},
           {"h4_rank", n.h4_rank}};
    if (n.k_plus_d_sq) c["k_plus_d_sq"] = *n.k_plus_d_sq;
    normal.push_back(std::move(c));
  }
  json curves = json::array();
  for (const auto& c : g.curve_components)
    curves.push_back(json{{"id", c.id},
                          {"on", c.on},
                          {"genus", c.genus},
                          {"marked_points", c.marked_points},
                          {"h2_class", c.h2_class}});
  json nodes = json::array();
  for (const auto& [a, b] : g.node_pairing) nodes.push_back(json::array({a, b}));
  json comps = json::array();
  for (const auto& [a, b] : g.component_involution) comps.push_back(json::array({a, b}));
  json points = json::object();
  for (const auto& [a, b] : g.point_involution) points[a] = b;
  return json{{"normalization", normal},
              {"curve_components", curves},
              {"node_pairing", nodes},
              {"involution", {{"components", comps}, {"points", points}}}};
}

GluingData gluing_from_value(const json& root) {
  GluingData g;
  const std::string top = "gluing data";
  for (const auto& n : array_field(root, "normalization", top)) {
    NormalComponent c;
    c.id = get<std::string>(n, "id", "normalization entry");
    const std::string where = "normal component " + c.id;
    c.chi_O = get<std::int64_t>(n, "chi_O", where);
    c.q = get<std::int64_t>(n, "q", where);
    c.simply_connected = get<bool>(n, "simply_connected", where);
    if (n.contains("h1")) c.h1 = abelian_from_json(n["h1"], where + " h1");
    c.h2_rank = get<std::size_t>(n, "h2_rank", where);
    if (n.contains("h3")) c.h3 = abelian_from_json(n["h3"], where + " h3");
    c.h4_rank = get<std::size_t>(n, "h4_rank", where);
    if (n.contains("k_plus_d_sq") && !n["k_plus_d_sq"].is_null())
      c.k_plus_d_sq = get<std::int64_t>(n, "k_plus_d_sq", where);
    g.normalization.push_back(std::move(c));
  }
  for (const auto& v : array_field(root, "curve_components", top)) {
    CurveComponent c;
    c.id = get<std::string>(v, "id", "curve component");
    const std::string where = "curve component " + c.id;
    c.on = get<std::string>(v, "on", where);
    c.genus = get<std::int64_t>(v, "genus", where);
    c.marked_points = get<std::vector<std::string>>(v, "marked_points", where);
    c.h2_class = get<std::vector<std::int64_t>>(v, "h2_class", where);
    g.curve_components.push_back(std::move(c));
  }
  for (const auto& v : array_field(root, "node_pairing", top))
    g.node_pairing.push_back(pair_from_json(v, "node_pairing"));
  const json& inv = field(root, "involution", top);
  for (const auto& v : array_field(inv, "components", "involution"))
    g.component_involution.push_back(pair_from_json(v, "involution.components"));
  const json& points = field(inv, "points", "involution");
  if (points.is_object()) {
    for (auto it = points.begin(); it != points.end(); ++it) {
      if (!it.value().is_string())
        throw Error(Errc::SchemaError, "involution.points: image of " + it.key() + " must be an id");
      g.point_involution.emplace_back(it.key(), it.value().get<std::string>());
    }
  } else if (points.is_array()) {
    for (const auto& v : points) g.point_involution.push_back(pair_from_json(v, "involution.points"));
  } else {
    throw Error(Errc::SchemaError, "involution.points must be an object");
  }
  return g;
}

json presentation_to_value(const GroupPresentation& p) {
  json rels = json::array();
  for (const auto& w : p.relators) rels.push_back(format_word(w, p.generators));
  return json{{"generators", p.generators}, {"relators", rels}};
}

GroupPresentation presentation_from_value(const json& v, const std::string& where) {
  GroupPresentation p;
  p.generators = get<std::vector<std::string>>(v, "generators", where);
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    for (std::size_t j = i + 1; j < p.generators.size(); ++j)
      if (p.generators[i] == p.generators[j])
        throw Error(Errc::DuplicateId, where + ": generator " + p.generators[i] + " repeated");
  for (const auto& r : get<std::vector<std::string>>(v, "relators", where))
    p.relators.push_back(parse_word(r, p.generators));
  return p;
}

json report_to_value(const InvariantReport& r) {
  json homology = json::array();
  for (const auto& h : r.homology.groups) homology.push_back(abelian_to_json(h));
  json out{{"chi", r.chi},       {"q", r.q},         {"pg", r.p_g},
           {"k2", r.k_squared ? json(*r.k_squared) : json(nullptr)},  {"cusps", r.cusps}, {"homology", homology}};
  if (r.pi1) {
    json pi1 = presentation_to_value(r.pi1->simplified);
    pi1["abelianization"] = abelian_to_json(r.pi1->abelianization);
    pi1["presentation"] = presentation_to_value(r.pi1->presentation);
    if (r.pi1->fingerprint) {
      json fp = json::array();
      for (const auto& e : r.pi1->fingerprint->entries)
        fp.push_back(json{{"group", e.group}, {"homs", e.count.total}, {"surjections", e.count.surjective}});
      pi1["fingerprint"] = fp;
    }
    out["pi1"] = pi1;
  } else {
    out["pi1"] = nullptr;
  }
  return out;
}

InvariantReport report_from_value(const json& v) {
  const std::string where = "report";
  InvariantReport r;
  r.chi = get<std::int64_t>(v, "chi", where);
  r.q = get<std::int64_t>(v, "q", where);
  r.p_g = get<std::int64_t>(v, "pg", where);
  if (!field(v, "k2", where).is_null()) r.k_squared = get<std::int64_t>(v, "k2", where);
  r.cusps = get<std::vector<std::vector<std::string>>>(v, "cusps", where);
  const json& h = array_field(v, "homology", where);
  if (h.size() != 5) throw Error(Errc::SchemaError, "report: homology must list H0..H4");
  for (std::size_t i = 0; i < 5; ++i)
    r.homology.groups[i] = abelian_from_json(h[i], "H" + std::to_string(i));
  if (v.contains("pi1") && !v["pi1"].is_null()) {
    const json& p = v["pi1"];
    Pi1Summary s;
    s.simplified = presentation_from_value(p, "pi1");
    s.presentation = presentation_from_value(field(p, "presentation", "pi1"), "pi1.presentation");
    s.abelianization = abelian_from_json(field(p, "abelianization", "pi1"), "pi1.abelianization");
    if (p.contains("fingerprint")) {
      Fingerprint fp;
      for (const auto& e : array_field(p, "fingerprint", "pi1"))
        fp.entries.push_back(FingerprintEntry{
            get<std::string>(e, "group", "fingerprint entry"),
            HomCount{get<std::uint64_t>(e, "homs", "fingerprint entry"),
                     get<std::uint64_t>(e, "surjections", "fingerprint entry")}});
      s.fingerprint = std::move(fp);
    }
    r.pi1 = std::move(s);
  }
  return r;
}

json bijection_to_value(const fourlines::LinePairBijections& b) {
  const std::array<std::string, 3> l2{"P21", "P23", "P24"}, l4{"P41", "P42", "P43"};
  json p12 = json::array(), p34 = json::array();
  for (int k = 0; k < 3; ++k) {
    p12.push_back(l2[b.phi12[k]]);
    p34.push_back(l4[b.phi34[k]]);
  }
  return json{{"phi12", p12}, {"phi34", p34}};
}

fourlines::LinePairBijections bijection_from_value(const json& v) {
  auto p12 = get<std::vector<std::string>>(v, "phi12", "bijection");
  auto p34 = get<std::vector<std::string>>(v, "phi34", "bijection");
  if (p12.size() != 3 || p34.size() != 3)
    throw Error(Errc::SchemaError, "bijection: phi12 and phi34 need three images each");
  return fourlines::bijections_from_images({p12[0], p12[1], p12[2]}, {p34[0], p34[1], p34[2]});
}

}  // namespace

GluingData parse_gluing_json(std::string_view text) { return gluing_from_value(parse_text(text)); }

std::string gluing_to_json(const GluingData& g) { return gluing_to_value(g).dump(2) + "\n"; }

GroupPresentation parse_presentation_json(std::string_view text) {
  return presentation_from_value(parse_text(text), "presentation");
}

std::string presentation_to_json(const GroupPresentation& p) {
  return presentation_to_value(p).dump(2) + "\n";
}

std::string report_to_json(const InvariantReport& r) { return report_to_value(r).dump(2) + "\n"; }

InvariantReport parse_report_json(std::string_view text) { return report_from_value(parse_text(text)); }

std::string orbits_to_json(const std::vector<fourlines::OrbitRecord>& records) {
  json out = json::array();
  for (const auto& rec : records) {
    json members = json::array();
    for (const auto& m : rec.members) members.push_back(bijection_to_value(m));
    json stab = json::array();
    for (const auto& g : rec.stabilizer) stab.push_back(fourlines::format_permutation(g));
    json aut_gens = json::array();
    for (const auto& g : fourlines::generators_of(rec.stabilizer))
      aut_gens.push_back(fourlines::format_permutation(g));
    out.push_back(json{{"label", rec.table_label ? json(*rec.table_label) : json(nullptr)},
                       {"representative", bijection_to_value(rec.representative)},
                       {"members", members},
                       {"orbit_size", rec.orbit_size},
                       {"stabilizer", stab},
                       {"aut_order", rec.stabilizer.size()},
                       {"aut_generators", aut_gens},
                       {"report", report_to_value(rec.report)}});
  }
  return out.dump(2) + "\n";
}

std::vector<fourlines::OrbitRecord> parse_orbits_json(std::string_view text) {
  json root = parse_text(text);
  if (!root.is_array()) throw Error(Errc::SchemaError, "orbit list must be an array");
  std::vector<fourlines::OrbitRecord> out;
  for (const auto& v : root) {
    fourlines::OrbitRecord rec;
    rec.representative = bijection_from_value(field(v, "representative", "orbit"));
    for (const auto& m : array_field(v, "members", "orbit")) rec.members.push_back(bijection_from_value(m));
    rec.orbit_size = get<std::size_t>(v, "orbit_size", "orbit");
    for (const auto& s : get<std::vector<std::string>>(v, "stabilizer", "orbit"))
      rec.stabilizer.push_back(fourlines::parse_permutation(s));
    const json& label = field(v, "label", "orbit");
    if (!label.is_null()) rec.table_label = label.get<std::string>();
    rec.report = report_from_value(field(v, "report", "orbit"));
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace slcinv
