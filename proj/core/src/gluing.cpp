#include "slcinv/gluing.hpp"

#include <algorithm>
#include <map>

#include "slcinv/error.hpp"
#include "union_find.hpp"

namespace slcinv {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

template <typename T>
std::map<std::string, std::size_t> index_by_id(const std::vector<T>& items,
                                               const char* what) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!out.emplace(items[i].id, i).second)
      throw Error(Errc::DuplicateId, std::string("duplicate ") + what + " id '" +
                                         items[i].id + "'");
  }
  return out;
}

// Symmetrizes a list of pairs into an involution on 0..n-1 (kNone where
// undefined). `lookup` resolves names; `kind` names the map in messages.
template <typename Lookup>
std::vector<std::size_t> symmetrize(const std::vector<IdPair>& pairs, std::size_t n,
                                    Lookup lookup, const std::string& kind,
                                    Errc unknown, Errc fixed) {
  std::vector<std::size_t> map(n, kNone);
  for (const auto& [a, b] : pairs) {
    std::size_t x = lookup(a);
    std::size_t y = lookup(b);
    if (x == kNone) throw Error(unknown, kind + " refers to unknown id '" + a + "'");
    if (y == kNone) throw Error(unknown, kind + " refers to unknown id '" + b + "'");
    if (x == y) throw Error(fixed, kind + " fixes '" + a + "'");
    if ((map[x] != kNone && map[x] != y) || (map[y] != kNone && map[y] != x))
      throw Error(Errc::NonInvolutive,
                  kind + " is not an involution at '" + a + "' / '" + b + "'");
    map[x] = y;
    map[y] = x;
  }
  return map;
}

}  // namespace

std::optional<std::size_t> ValidatedGluing::find_point(const std::string& name) const {
  auto it = std::lower_bound(point_names_.begin(), point_names_.end(), name);
  if (it == point_names_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - point_names_.begin());
}

ValidatedGluing validate_gluing(const GluingData& raw) {
  ValidatedGluing g;

  g.normal_ = raw.normalization;
  std::sort(g.normal_.begin(), g.normal_.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  auto normal_index = index_by_id(g.normal_, "normal component");
  for (const auto& n : g.normal_) {
    if (n.q < 0) throw Error(Errc::SchemaError, "negative irregularity on '" + n.id + "'");
  }

  g.curves_ = raw.curve_components;
  std::sort(g.curves_.begin(), g.curves_.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  auto curve_index = index_by_id(g.curves_, "curve component");

  std::map<std::string, std::size_t> point_owner;
  for (std::size_t c = 0; c < g.curves_.size(); ++c) {
    const auto& cc = g.curves_[c];
    auto amb = normal_index.find(cc.on);
    if (amb == normal_index.end())
      throw Error(Errc::UnknownComponent,
                  "curve '" + cc.id + "' lies on unknown normal component '" + cc.on + "'");
    g.ambient_.push_back(amb->second);
    if (cc.genus < 0) throw Error(Errc::SchemaError, "negative genus on '" + cc.id + "'");
    if (cc.marked_points.empty())
      throw Error(Errc::SchemaError, "curve '" + cc.id + "' has no marked points");
    if (cc.h2_class.size() != g.normal_[amb->second].h2_rank)
      throw Error(Errc::SchemaError, "h2_class of '" + cc.id + "' has length " +
                                         std::to_string(cc.h2_class.size()) +
                                         ", ambient H2 rank is " +
                                         std::to_string(g.normal_[amb->second].h2_rank));
    for (const auto& p : cc.marked_points) {
      if (!point_owner.emplace(p, c).second)
        throw Error(Errc::DuplicateId, "marked point '" + p + "' appears twice");
    }
  }

  for (const auto& [name, c] : point_owner) {
    g.point_names_.push_back(name);
    g.curve_of_point_.push_back(c);
  }
  const std::size_t np = g.point_names_.size();
  auto point_lookup = [&g](const std::string& s) {
    return g.find_point(s).value_or(kNone);
  };
  auto curve_lookup = [&curve_index](const std::string& s) {
    auto it = curve_index.find(s);
    return it == curve_index.end() ? kNone : it->second;
  };

  g.curve_points_.resize(g.curves_.size());
  for (std::size_t c = 0; c < g.curves_.size(); ++c)
    for (const auto& p : g.curves_[c].marked_points)
      g.curve_points_[c].push_back(*g.find_point(p));

  g.sigma_ = symmetrize(raw.node_pairing, np, point_lookup, "node pairing",
                        Errc::DanglingPoint, Errc::FixedMarkedPoint);
  for (std::size_t p = 0; p < np; ++p)
    if (g.sigma_[p] == kNone)
      throw Error(Errc::UnpairedPoint, "marked point '" + g.point_names_[p] +
                                           "' is not paired to a node partner");

  for (std::size_t p = 0; p < np; ++p) {
    if (g.ambient_[g.curve_of_point_[p]] != g.ambient_[g.curve_of_point_[g.sigma_[p]]])
      throw Error(Errc::ComponentMismatch,
                  "node '" + g.point_names_[p] + "' / '" + g.point_names_[g.sigma_[p]] +
                      "' joins curves on different normal components");
  }

  g.curve_partner_ = symmetrize(raw.component_involution, g.curves_.size(), curve_lookup,
                                "component involution", Errc::UnknownComponent,
                                Errc::FixedComponent);
  for (std::size_t c = 0; c < g.curves_.size(); ++c) {
    if (g.curve_partner_[c] == kNone)
      throw Error(Errc::FixedComponent,
                  "curve '" + g.curves_[c].id + "' is mapped to itself by tau");
    const auto& other = g.curves_[g.curve_partner_[c]];
    if (other.genus != g.curves_[c].genus ||
        other.marked_points.size() != g.curves_[c].marked_points.size())
      throw Error(Errc::ComponentMismatch,
                  "curves '" + g.curves_[c].id + "' and '" + other.id +
                      "' differ in genus or number of marked points");
  }

  g.tau_ = symmetrize(raw.point_involution, np, point_lookup, "point involution",
                      Errc::DanglingPoint, Errc::FixedMarkedPoint);
  for (std::size_t p = 0; p < np; ++p) {
    if (g.tau_[p] == kNone)
      throw Error(Errc::UnpairedPoint,
                  "marked point '" + g.point_names_[p] + "' has no tau image");
    std::size_t expected = g.curve_partner_[g.curve_of_point_[p]];
    if (g.curve_of_point_[g.tau_[p]] != expected)
      throw Error(Errc::ComponentMismatch,
                  "tau sends '" + g.point_names_[p] + "' to '" +
                      g.point_names_[g.tau_[p]] + "' which is not on '" +
                      g.curves_[expected].id + "'");
  }

  g.node_of_point_.assign(np, kNone);
  for (std::size_t p = 0; p < np; ++p) {
    if (p < g.sigma_[p]) {
      g.node_of_point_[p] = g.node_of_point_[g.sigma_[p]] = g.nodes_.size();
      g.nodes_.push_back(Node{p, g.sigma_[p]});
    }
  }

  // Dbar: curve components joined along nodes.
  detail::UnionFind dbar(g.curves_.size());
  for (const auto& n : g.nodes_) dbar.unite(g.curve_of_point_[n.lo], g.curve_of_point_[n.hi]);
  g.dbar_comp_of_curve_ = dbar.labels(&g.dbar_components_);

  // X: normal components joined through tau.
  const std::size_t nn = g.normal_.size();
  detail::UnionFind x(nn);
  for (std::size_t p = 0; p < np; ++p) {
    std::size_t here = g.ambient_[g.curve_of_point_[p]];
    x.unite(here, g.ambient_[g.curve_of_point_[g.tau_[p]]]);
  }
  x.labels(&g.x_components_);

  GluingData& canon = g.canonical_;
  canon.normalization = g.normal_;
  canon.curve_components = g.curves_;
  for (const auto& n : g.nodes_)
    canon.node_pairing.emplace_back(g.point_names_[n.lo], g.point_names_[n.hi]);
  for (std::size_t c = 0; c < g.curves_.size(); ++c)
    if (c < g.curve_partner_[c])
      canon.component_involution.emplace_back(g.curves_[c].id,
                                              g.curves_[g.curve_partner_[c]].id);
  for (std::size_t p = 0; p < np; ++p)
    if (p < g.tau_[p])
      canon.point_involution.emplace_back(g.point_names_[p], g.point_names_[g.tau_[p]]);

  return g;
}

std::vector<std::size_t> DegenerateCusp::sorted_nodes() const {
  std::vector<std::size_t> out = nodes;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DegenerateCusp> cusps(const ValidatedGluing& g) {
  const std::size_t np = g.point_count();
  std::vector<bool> seen(np, false);
  std::vector<DegenerateCusp> out;
  // Points are indexed in name order, so the first unseen point is the
  // smallest of its orbit, and orbits come out ordered by smallest point,
  // which is also the smallest node.
  for (std::size_t start = 0; start < np; ++start) {
    if (seen[start]) continue;
    DegenerateCusp cusp;
    std::size_t r = start;
    do {
      std::size_t s = g.sigma(r);
      cusp.r_cycle.push_back(r);
      cusp.s_cycle.push_back(s);
      cusp.nodes.push_back(g.node_of_point(r));
      seen[r] = seen[s] = true;
      r = g.tau(s);
    } while (r != start);
    cusp.mu = cusp.r_cycle.size();
    out.push_back(std::move(cusp));
  }
  return out;
}

std::vector<std::vector<std::string>> cusp_node_names(const ValidatedGluing& g,
                                                      const std::vector<DegenerateCusp>& cs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cs) {
    std::vector<std::string> names;
    for (std::size_t n : c.nodes) names.push_back(g.node_name(n));
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DCurveModel quotient_curve(const ValidatedGluing& g) {
  DCurveModel m;
  const std::size_t nc = g.curve_components().size();
  m.component_of_curve.assign(nc, 0);
  for (std::size_t c = 0; c < nc; ++c) {
    std::size_t partner = g.curve_partner(c);
    if (c < partner) {
      m.component_of_curve[c] = m.component_of_curve[partner] = m.components.size();
      m.components.emplace_back(c, partner);
    }
  }

  auto cs = cusps(g);
  std::vector<std::size_t> cusp_of_point(g.point_count());
  for (std::size_t k = 0; k < cs.size(); ++k) {
    for (std::size_t p : cs[k].r_cycle) cusp_of_point[p] = k;
    for (std::size_t p : cs[k].s_cycle) cusp_of_point[p] = k;
  }

  // Preimages of a cusp in D^nu are the tau-classes of its points.
  m.cusp_preimages.assign(cs.size(), 0);
  for (std::size_t p = 0; p < g.point_count(); ++p)
    if (p < g.tau(p)) ++m.cusp_preimages[cusp_of_point[p]];

  detail::UnionFind uf(m.components.size() + cs.size());
  for (std::size_t p = 0; p < g.point_count(); ++p)
    uf.unite(m.component_of_curve[g.curve_of_point(p)], m.components.size() + cusp_of_point[p]);
  uf.labels(&m.connected_components);
  return m;
}

EulerCharacteristics euler_characteristics(const ValidatedGluing& g) {
  EulerCharacteristics e;
  for (const auto& c : g.curve_components()) e.chi_dbar += 1 - c.genus;
  e.chi_dbar -= static_cast<std::int64_t>(g.nodes().size());

  DCurveModel d = quotient_curve(g);
  for (const auto& [c, partner] : d.components) e.chi_d += 1 - g.curve_components()[c].genus;
  for (const auto& cusp : cusps(g)) e.chi_d -= static_cast<std::int64_t>(cusp.mu) - 1;

  for (const auto& n : g.normal_components()) e.chi_x += n.chi_O;
  e.chi_x += e.chi_d - e.chi_dbar;
  return e;
}

}  // namespace slcinv
