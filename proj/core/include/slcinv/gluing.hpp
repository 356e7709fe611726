#pragma once

// Combinatorial gluing data (normalization, marked conductor curve, node
// pairing sigma, gluing involution tau) for a demi-normal surface, together
// with the cusp and Euler characteristic combinatorics derived from it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slcinv/abelian_group.hpp"

namespace slcinv {

struct NormalComponent {
  std::string id;
  std::int64_t chi_O = 1;
  std::int64_t q = 0;
  bool simply_connected = true;
  AbelianGroup h1;
  std::size_t h2_rank = 0;
  AbelianGroup h3;
  std::size_t h4_rank = 1;
  // (K + D)^2 contributed by this component.
  std::optional<std::int64_t> k_plus_d_sq;

  friend bool operator==(const NormalComponent&, const NormalComponent&) = default;
};

struct CurveComponent {
  std::string id;
  std::string on;  // id of the ambient NormalComponent
  std::int64_t genus = 0;
  std::vector<std::string> marked_points;
  std::vector<std::int64_t> h2_class;

  friend bool operator==(const CurveComponent&, const CurveComponent&) = default;
};

using IdPair = std::pair<std::string, std::string>;

// Unvalidated input. Each involution is given as a list of unordered pairs.
struct GluingData {
  std::vector<NormalComponent> normalization;
  std::vector<CurveComponent> curve_components;
  std::vector<IdPair> node_pairing;
  std::vector<IdPair> component_involution;
  std::vector<IdPair> point_involution;

  friend bool operator==(const GluingData&, const GluingData&) = default;
};

// A node of Dbar: the sigma-pair {lo, hi} of marked points, lo < hi by name.
struct Node {
  std::size_t lo;
  std::size_t hi;
};

class ValidatedGluing;

ValidatedGluing validate_gluing(const GluingData& raw);

// Immutable, canonically ordered view of valid gluing data. Normal components
// and curve components are sorted by id, marked points are indexed in
// lexicographic order of their names. Marked points keep their stored order
// within each curve component.
class ValidatedGluing {
 public:
  const std::vector<NormalComponent>& normal_components() const { return normal_; }
  const std::vector<CurveComponent>& curve_components() const { return curves_; }

  std::size_t point_count() const { return point_names_.size(); }
  const std::string& point_name(std::size_t p) const { return point_names_[p]; }
  std::optional<std::size_t> find_point(const std::string& name) const;

  std::size_t sigma(std::size_t p) const { return sigma_[p]; }
  std::size_t tau(std::size_t p) const { return tau_[p]; }
  std::size_t curve_of_point(std::size_t p) const { return curve_of_point_[p]; }
  // Marked point indices of curve component c in stored order.
  const std::vector<std::size_t>& points_of_curve(std::size_t c) const {
    return curve_points_[c];
  }
  std::size_t curve_partner(std::size_t c) const { return curve_partner_[c]; }
  std::size_t ambient_of_curve(std::size_t c) const { return ambient_[c]; }

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t node_of_point(std::size_t p) const { return node_of_point_[p]; }
  // Node label: name of its lexicographically smaller preimage.
  const std::string& node_name(std::size_t n) const { return point_names_[nodes_[n].lo]; }

  std::size_t dbar_component_count() const { return dbar_components_; }
  bool dbar_connected() const { return dbar_components_ == 1; }
  // Connected components of Dbar, as a component index per curve component.
  std::size_t dbar_component_of_curve(std::size_t c) const { return dbar_comp_of_curve_[c]; }
  std::size_t x_component_count() const { return x_components_; }

  // Canonical (sorted, symmetrized-once) raw form of this data.
  const GluingData& data() const { return canonical_; }

 private:
  friend ValidatedGluing validate_gluing(const GluingData& raw);
  ValidatedGluing() = default;

  std::vector<NormalComponent> normal_;
  std::vector<CurveComponent> curves_;
  std::vector<std::string> point_names_;
  std::vector<std::size_t> sigma_;
  std::vector<std::size_t> tau_;
  std::vector<std::size_t> curve_of_point_;
  std::vector<std::vector<std::size_t>> curve_points_;
  std::vector<std::size_t> curve_partner_;
  std::vector<std::size_t> ambient_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> node_of_point_;
  std::vector<std::size_t> dbar_comp_of_curve_;
  std::size_t dbar_components_ = 0;
  std::size_t x_components_ = 0;
  GluingData canonical_;
};

// One <sigma, tau>-orbit of marked points. r_cycle[i+1] = tau(sigma(r_cycle[i]))
// cyclically, s_cycle[i] = sigma(r_cycle[i]); nodes[i] is the node of r_i.
struct DegenerateCusp {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> r_cycle;
  std::vector<std::size_t> s_cycle;
  std::size_t mu = 0;

  std::vector<std::size_t> sorted_nodes() const;
};

// The r-cycle is the tau*sigma orbit containing the smallest point of the
// orbit; cusps are sorted by their smallest node.
std::vector<DegenerateCusp> cusps(const ValidatedGluing& g);

// Node names of each cusp, sorted within and across cusps.
std::vector<std::vector<std::string>> cusp_node_names(const ValidatedGluing& g,
                                                      const std::vector<DegenerateCusp>& cs);

// Combinatorial model of the non-normal locus D and its normalization.
struct DCurveModel {
  // tau-orbits {c, tau(c)} of curve components, smaller index first.
  std::vector<std::pair<std::size_t, std::size_t>> components;
  // index into `components` for every curve component
  std::vector<std::size_t> component_of_curve;
  // number of preimages in D^nu of every cusp (same order as cusps())
  std::vector<std::size_t> cusp_preimages;
  std::size_t connected_components = 0;

  bool connected() const { return connected_components == 1; }
};

DCurveModel quotient_curve(const ValidatedGluing& g);

struct EulerCharacteristics {
  std::int64_t chi_dbar = 0;
  std::int64_t chi_d = 0;
  std::int64_t chi_x = 0;
};

// chi(O) of Dbar, D and X, via chi(X) = chi(Xbar) - chi(Dbar) + chi(D).
EulerCharacteristics euler_characteristics(const ValidatedGluing& g);

}  // namespace slcinv
