#include "slcinv/invariants.hpp"

#include <algorithm>

#include "slcinv/error.hpp"

namespace slcinv {

int AntiInvariantBasis::value(std::size_t basis_index, std::size_t curve) const {
  const auto& [plus, minus] = pairs.at(basis_index);
  if (curve == plus) return 1;
  if (curve == minus) return -1;
  return 0;
}

AntiInvariantBasis anti_invariant_basis(const ValidatedGluing& g) {
  AntiInvariantBasis b;
  // Curves are sorted by id, so the smaller index has the smaller id.
  for (std::size_t c = 0; c < g.curve_components().size(); ++c)
    if (c < g.curve_partner(c)) b.pairs.emplace_back(c, g.curve_partner(c));
  return b;
}

IntegerMatrix cusp_matrix(const ValidatedGluing& g) {
  for (const auto& n : g.normal_components())
    if (n.q != 0)
      throw Error(Errc::NormalizationIrregular,
                  "normal component '" + n.id + "' has q = " + std::to_string(n.q));
  auto cs = cusps(g);
  auto basis = anti_invariant_basis(g);
  IntegerMatrix m(cs.size(), basis.pairs.size());
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < basis.pairs.size(); ++j) {
      long long entry = 0;
      for (std::size_t k = 0; k < cs[i].mu; ++k)
        entry += basis.value(j, g.curve_of_point(cs[i].r_cycle[k])) -
                 basis.value(j, g.curve_of_point(cs[i].s_cycle[k]));
      m(i, j) = entry;
    }
  return m;
}

Irregularity irregularity(const ValidatedGluing& g) {
  IntegerMatrix m = cusp_matrix(g);
  if (g.x_component_count() != 1)
    throw Error(Errc::XDisconnected, "irregularity needs a connected surface");
  const auto kernel_dim = static_cast<std::int64_t>(m.cols() - rank(m));
  const auto components = static_cast<std::int64_t>(g.normal_components().size());
  Irregularity r;
  r.q = kernel_dim - components + 1;
  r.p_g = euler_characteristics(g).chi_x - 1 + r.q;
  if (r.q < 0 || r.p_g < 0)
    throw Error(Errc::NegativeResult, "q = " + std::to_string(r.q) + ", p_g = " +
                                          std::to_string(r.p_g) + "; input is inconsistent");
  return r;
}

std::int64_t k_squared(const ValidatedGluing& g) {
  std::int64_t total = 0;
  for (const auto& n : g.normal_components()) {
    if (!n.k_plus_d_sq)
      throw Error(Errc::MissingField, "normal component '" + n.id + "' has no k_plus_d_sq");
    total += *n.k_plus_d_sq;
  }
  return total;
}

InvariantReport invariant_report(const ValidatedGluing& g, const ReportOptions& options) {
  InvariantReport r;
  r.chi = euler_characteristics(g).chi_x;
  Irregularity irr = irregularity(g);
  r.q = irr.q;
  r.p_g = irr.p_g;
  if (std::all_of(g.normal_components().begin(), g.normal_components().end(),
                  [](const NormalComponent& n) { return n.k_plus_d_sq.has_value(); }))
    r.k_squared = k_squared(g);
  r.cusps = cusp_node_names(g, cusps(g));
  r.homology = homology_of_X(g);
  if (g.dbar_connected()) {
    Pi1Summary s;
    s.presentation = pi1_presentation(g);
    s.simplified = tietze_simplify(s.presentation);
    s.abelianization = abelianization(s.presentation);
    if (options.with_fingerprint)
      s.fingerprint = fingerprint(s.simplified, catalog(options.catalog), options.budget);
    r.pi1 = std::move(s);
  }
  return r;
}

PicardSummary picard_summary(const InvariantReport& r) {
  if (r.p_g != 0)
    throw Error(Errc::GeometricGenusNonzero,
                "p_g = " + std::to_string(r.p_g) + "; the exponential sequence argument needs p_g = 0");
  PicardSummary s;
  s.pic0_dimension = r.q;
  s.b1 = r.homology[1].free_rank;
  s.ns_target = AbelianGroup::from_cyclic_orders(r.homology[2].free_rank, r.homology[1].torsion);
  if (r.q >= 0 && static_cast<std::size_t>(r.q) == s.b1) {
    if (r.q == 0)
      s.structure = "trivial";
    else if (r.q == 1)
      s.structure = "C*";
    else
      s.structure = "C*^" + std::to_string(r.q);
  }
  return s;
}

}  // namespace slcinv
