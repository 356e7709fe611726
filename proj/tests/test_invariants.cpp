#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "slcinv/error.hpp"
#include "slcinv/fourlines.hpp"
#include "slcinv/invariants.hpp"

using namespace slcinv;

namespace {

using Dense = std::vector<std::vector<long long>>;

// Cusp matrix straight from the raw data. Cusps are the <sigma, tau> orbits;
// the r-cycle starts at the smallest point name and follows tau(sigma(.)).
// Rows are ordered by the smallest node name, node names being the smaller
// preimage. When `swap_rs` is set the s-cycle plays the role of r.
Dense cusp_matrix_oracle(const GluingData& g, bool swap_rs = false) {
  std::map<std::string, std::string> sigma, tau;
  for (const auto& [a, b] : g.node_pairing) sigma[a] = b, sigma[b] = a;
  for (const auto& [a, b] : g.point_involution) tau[a] = b, tau[b] = a;
  std::map<std::string, std::string> curve_of;
  for (const auto& c : g.curve_components)
    for (const auto& p : c.marked_points) curve_of[p] = c.id;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto [a, b] : g.component_involution) pairs.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(pairs.begin(), pairs.end());
  auto f = [&](std::size_t j, const std::string& p) {
    if (curve_of[p] == pairs[j].first) return 1;
    if (curve_of[p] == pairs[j].second) return -1;
    return 0;
  };

  std::set<std::string> seen;
  std::vector<std::pair<std::string, std::vector<long long>>> rows;
  for (const auto& [start, unused] : sigma) {
    if (seen.count(start)) continue;
    std::vector<std::string> r;
    std::string x = start;
    do {
      r.push_back(x);
      x = tau[sigma[x]];
    } while (x != start);
    std::string min_node = "~";
    std::vector<long long> row(pairs.size(), 0);
    for (const auto& ri : r) {
      std::string si = sigma[ri];
      seen.insert(ri);
      seen.insert(si);
      min_node = std::min(min_node, std::min(ri, si));
      for (std::size_t j = 0; j < pairs.size(); ++j) row[j] += swap_rs ? f(j, si) - f(j, ri) : f(j, ri) - f(j, si);
    }
    rows.emplace_back(min_node, row);
  }
  std::sort(rows.begin(), rows.end());
  Dense out;
  for (auto& [k, row] : rows) out.push_back(row);
  return out;
}

std::size_t rank_oracle(Dense m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long long a = m[rank][c], b = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * a - m[rank][k] * b;
    }
    ++rank;
  }
  return rank;
}

Dense to_dense(const IntegerMatrix& m) {
  Dense d(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m(r, c).convert_to<long long>();
  return d;
}

// Renames every point and component and shuffles every list.
GluingData relabeled(const GluingData& g, std::mt19937& rng) {
  std::map<std::string, std::string> rename;
  std::vector<std::string> names;
  for (const auto& c : g.curve_components)
    for (const auto& p : c.marked_points) names.push_back(p);
  std::vector<std::string> fresh;
  for (std::size_t i = 0; i < names.size(); ++i) fresh.push_back("pt" + std::to_string(1000 + i));
  std::shuffle(fresh.begin(), fresh.end(), rng);
  for (std::size_t i = 0; i < names.size(); ++i) rename[names[i]] = fresh[i];
  std::vector<std::string> curve_names;
  for (const auto& c : g.curve_components) curve_names.push_back(c.id);
  std::vector<std::string> fresh_curves;
  for (std::size_t i = 0; i < curve_names.size(); ++i) fresh_curves.push_back("K" + std::to_string(i));
  std::shuffle(fresh_curves.begin(), fresh_curves.end(), rng);
  for (std::size_t i = 0; i < curve_names.size(); ++i) rename[curve_names[i]] = fresh_curves[i];

  GluingData h = g;
  for (auto& c : h.curve_components) {
    c.id = rename[c.id];
    for (auto& p : c.marked_points) p = rename[p];
    std::shuffle(c.marked_points.begin(), c.marked_points.end(), rng);
  }
  std::shuffle(h.curve_components.begin(), h.curve_components.end(), rng);
  for (auto* list : {&h.node_pairing, &h.point_involution, &h.component_involution}) {
    for (auto& [a, b] : *list) {
      a = rename[a];
      b = rename[b];
      if (rng() % 2) std::swap(a, b);
    }
    std::shuffle(list->begin(), list->end(), rng);
  }
  return h;
}

}  // namespace

TEST_CASE("cusp matrix of X0.1") {
  auto g = fixtures::load_valid("x01.json");
  auto m = cusp_matrix(g);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 2);
  CHECK(abs(m(0, 0)) == 2);
  CHECK(m(0, 0) == m(0, 1));
  auto irr = irregularity(g);
  CHECK(irr.q == 1);
  CHECK(irr.p_g == 0);
}

TEST_CASE("cusp matrices of X3.1 and X0.2") {
  CHECK(cusp_matrix(fixtures::load_valid("x31.json")) == IntegerMatrix{{2, 0}, {2, -2}, {2, 2}, {0, 2}});
  auto m02 = cusp_matrix(fixtures::load_valid("x02.json"));
  CHECK(to_dense(m02) == cusp_matrix_oracle(fixtures::load_data("x02.json")));
}

TEST_CASE("cusp matrix and q agree with the oracle on all 36 gluings") {
  for (const auto& b : fourlines::all_bijections()) {
    auto raw = fourlines::build_four_lines(b);
    auto g = validate_gluing(raw);
    auto m = to_dense(cusp_matrix(g));
    auto oracle = cusp_matrix_oracle(raw);
    CHECK_MESSAGE(m == oracle, fourlines::to_string(b));
    auto irr = irregularity(g);
    CHECK(irr.q == static_cast<std::int64_t>(2 - rank_oracle(oracle)));
    CHECK(irr.p_g == euler_characteristics(g).chi_x - 1 + irr.q);
    CHECK(k_squared(g) == 1);
  }
}

TEST_CASE("kernel dimension is invariant under r/s swaps and basis sign flips") {
  std::mt19937 rng(5);
  auto check_flips = [&](const GluingData& raw) {
    auto m = to_dense(cusp_matrix(validate_gluing(raw)));
    auto swapped = cusp_matrix_oracle(raw, true);
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m[r].size(); ++c) CHECK(swapped[r][c] == -m[r][c]);
    const std::size_t rank = rank_oracle(m);
    for (int trial = 0; trial < 8; ++trial) {
      Dense flipped = m;
      for (auto& row : flipped)
        if (rng() % 2)
          for (auto& x : row) x = -x;
      for (std::size_t c = 0; c < (m.empty() ? 0 : m[0].size()); ++c)
        if (rng() % 2)
          for (auto& row : flipped) row[c] = -row[c];
      CHECK(rank_oracle(flipped) == rank);
    }
  };
  for (const auto& b : fourlines::all_bijections()) check_flips(fourlines::build_four_lines(b));
  for (int trial = 0; trial < 60; ++trial) check_flips(fixtures::random_gluing(rng, 1 + rng() % 3));
}

TEST_CASE("q and homology survive relabeling and reordering") {
  std::mt19937 rng(11);
  for (const auto& b : fourlines::all_bijections()) {
    auto raw = fourlines::build_four_lines(b);
    auto g = validate_gluing(raw);
    for (int trial = 0; trial < 3; ++trial) {
      auto h = validate_gluing(relabeled(raw, rng));
      CHECK(irregularity(h).q == irregularity(g).q);
      CHECK(homology_of_X(h) == homology_of_X(g));
      CHECK(euler_characteristics(h).chi_x == euler_characteristics(g).chi_x);
    }
  }
}

TEST_CASE("invariant report and Picard summary") {
  auto r01 = invariant_report(fixtures::load_valid("x01.json"));
  CHECK(r01.chi == 0);
  CHECK(r01.q == 1);
  CHECK(r01.p_g == 0);
  CHECK(r01.k_squared == 1);
  REQUIRE(r01.pi1.has_value());
  CHECK(r01.pi1->abelianization.to_string() == "Z");
  CHECK_FALSE(r01.pi1->fingerprint.has_value());
  auto pic = picard_summary(r01);
  CHECK(pic.pic0_dimension == 1);
  CHECK(pic.b1 == 1);
  CHECK(pic.structure == std::optional<std::string>("C*"));
  CHECK(pic.ns_target.to_string() == "Z");

  auto r31 = invariant_report(fixtures::load_valid("x31.json"));
  CHECK(r31.p_g == 2);
  CHECK_THROWS_AS(picard_summary(r31), Error);

  auto z3 = invariant_report(fixtures::load_valid("z3.json"));
  CHECK_FALSE(z3.k_squared.has_value());
  auto pz = picard_summary(z3);
  CHECK(pz.structure == std::optional<std::string>("trivial"));
  CHECK(pz.ns_target.to_string() == "Z + Z/3");
}

TEST_CASE("irregular normalization is rejected") {
  auto raw = fixtures::load_data("x01.json");
  raw.normalization[0].q = 1;
  auto g = validate_gluing(raw);
  try {
    cusp_matrix(g);
    FAIL("expected NormalizationIrregular");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NormalizationIrregular);
  }
}

TEST_CASE("fingerprint in the report") {
  ReportOptions options;
  options.with_fingerprint = true;
  options.catalog = {"C2", "A4"};
  auto r = invariant_report(fixtures::load_valid("x01.json"), options);
  REQUIRE(r.pi1->fingerprint.has_value());
  REQUIRE(r.pi1->fingerprint->entries.size() == 2);
  CHECK(r.pi1->fingerprint->entries[1].group == "A4");
  CHECK(r.pi1->fingerprint->entries[1].count.surjective >= 1);
}
