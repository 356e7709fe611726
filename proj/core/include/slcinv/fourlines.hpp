#pragma once

// Gorenstein gluings of the plane along four general lines L1..L4, with tau
// exchanging L1 <-> L2 and L3 <-> L4. Such a tau is a pair of bijections
// phi12 : {P12, P13, P14} -> {P21, P23, P24} and
// phi34 : {P31, P32, P34} -> {P41, P42, P43}, i.e. an element of S3 x S3.
// The symmetries of the configuration preserving {{1,2},{3,4}} form a
// dihedral group of order 8 acting by relabelling indices.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slcinv/gluing.hpp"
#include "slcinv/invariants.hpp"

namespace slcinv::fourlines {

struct LinePairBijections {
  // phi12[k] is the index (into P21, P23, P24) of the image of the k-th
  // point of P12, P13, P14; likewise for phi34.
  std::array<std::uint8_t, 3> phi12{0, 1, 2};
  std::array<std::uint8_t, 3> phi34{0, 1, 2};

  friend auto operator<=>(const LinePairBijections&, const LinePairBijections&) = default;
  friend bool operator==(const LinePairBijections&, const LinePairBijections&) = default;
};

// Builds from explicit image lists, e.g. {"P23", "P21", "P24"}.
LinePairBijections bijections_from_images(const std::array<std::string, 3>& images12,
                                          const std::array<std::string, 3>& images34);
std::string to_string(const LinePairBijections& b);

// All 36 elements in lexicographic order.
std::vector<LinePairBijections> all_bijections();

GluingData build_four_lines(const LinePairBijections& b);

// Permutation of {1, 2, 3, 4}: element k is the image of k + 1.
using IndexPermutation = std::array<std::uint8_t, 4>;

const std::vector<IndexPermutation>& d4_elements();
bool in_d4(const IndexPermutation& g);
IndexPermutation compose(const IndexPermutation& first, const IndexPermutation& second);
// Cycle notation, e.g. "(12)(34)"; the identity is "()".
std::string format_permutation(const IndexPermutation& g);
IndexPermutation parse_permutation(const std::string& cycles);

// Relabels P_ij -> P_g(i)g(j) and reads off the conjugated involution.
LinePairBijections d4_action(const IndexPermutation& g, const LinePairBijections& b);

std::vector<LinePairBijections> orbit(const LinePairBijections& b);

// D4-stabilizer of b, which is Aut(X) of the glued surface.
std::vector<IndexPermutation> automorphism_group(const LinePairBijections& b);

// Closure of `gens` in Sym(4), sorted.
std::vector<IndexPermutation> generated_subgroup(const std::vector<IndexPermutation>& gens);
// A small generating set, found greedily in sorted element order.
std::vector<IndexPermutation> generators_of(const std::vector<IndexPermutation>& subgroup);
bool conjugate_in_d4(const std::vector<IndexPermutation>& a, const std::vector<IndexPermutation>& b);

struct TableRow {
  std::string label;  // "X0.1"
  std::int64_t chi;
  LinePairBijections representative;
  std::vector<std::vector<std::string>> cusps;  // node names, e.g. "P12" for P(12)
  std::int64_t q;
  std::vector<IndexPermutation> aut_generators;
  std::string aut_text;
};

// The published classification, in its row order.
const std::vector<TableRow>& reference_table();

struct OrbitRecord {
  LinePairBijections representative;  // lexicographic minimum of the orbit
  std::vector<LinePairBijections> members;
  std::size_t orbit_size = 0;
  std::vector<IndexPermutation> stabilizer;
  InvariantReport report;
  std::optional<std::string> table_label;

  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

// Orbit decomposition of all 36 gluings with the invariant report of each
// representative. Labels are matched on (chi, cusp sizes, |Aut|); rows that
// share that key are told apart by which orbit contains the row's
// representative. Output follows the reference table order.
std::vector<OrbitRecord> enumerate_orbits(const ReportOptions& options = {});

}  // namespace slcinv::fourlines
