#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slcinv/finite_group.hpp"
#include "slcinv/gluing.hpp"
#include "slcinv/intlinalg.hpp"
#include "slcinv/topology.hpp"
#include "slcinv/words.hpp"

namespace slcinv {

// Basis of tau-anti-invariant locally constant functions on the normalized
// conductor: one function per tau-swapped pair of curves, +1 on the curve
// with the smaller id and -1 on its partner.
struct AntiInvariantBasis {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (+1 curve, -1 curve)

  int value(std::size_t basis_index, std::size_t curve) const;
};

AntiInvariantBasis anti_invariant_basis(const ValidatedGluing& g);

// Rows are the degenerate cusps (in cusps() order), columns the anti-invariant
// basis; entry sum_i f(r_i) - f(s_i). Requires q = 0 on every normal component.
IntegerMatrix cusp_matrix(const ValidatedGluing& g);

struct Irregularity {
  std::int64_t q = 0;
  std::int64_t p_g = 0;
};

// q = dim ker(cusp matrix) - m + 1, p_g = chi - 1 + q for connected X.
Irregularity irregularity(const ValidatedGluing& g);

std::int64_t k_squared(const ValidatedGluing& g);

struct Pi1Summary {
  GroupPresentation presentation;  // as computed, before simplification
  GroupPresentation simplified;
  AbelianGroup abelianization;
  std::optional<Fingerprint> fingerprint;

  friend bool operator==(const Pi1Summary&, const Pi1Summary&) = default;
};

struct InvariantReport {
  std::int64_t chi = 0;
  std::int64_t q = 0;
  std::int64_t p_g = 0;
  // Absent when some normal component does not record (K + D)^2.
  std::optional<std::int64_t> k_squared;
  std::vector<std::vector<std::string>> cusps;  // node names per cusp
  HomologyOfX homology;
  // Absent when Dbar is disconnected (no amalgam description).
  std::optional<Pi1Summary> pi1;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

struct ReportOptions {
  bool with_fingerprint = false;
  std::vector<std::string> catalog = default_catalog_names();
  std::uint64_t budget = kDefaultHomBudget;
};

InvariantReport invariant_report(const ValidatedGluing& g, const ReportOptions& options = {});

struct PicardSummary {
  std::int64_t pic0_dimension = 0;  // = q
  std::size_t b1 = 0;               // free rank of H1(X)
  // H^2(X, Z) = Z^{rank H2} + torsion of H1 by universal coefficients.
  AbelianGroup ns_target;
  // "C*", "C*^q" or "trivial"; only set when q = b1.
  std::optional<std::string> structure;
};

// Requires p_g = 0.
PicardSummary picard_summary(const InvariantReport& r);

}  // namespace slcinv
