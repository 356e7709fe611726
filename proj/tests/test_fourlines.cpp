#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "slcinv/error.hpp"
#include "slcinv/fourlines.hpp"

using namespace slcinv;
using namespace slcinv::fourlines;

namespace {

using Tau = std::map<std::string, std::string>;

Tau tau_of(const LinePairBijections& b) {
  Tau t;
  for (const auto& [x, y] : build_four_lines(b).point_involution) t[x] = y, t[y] = x;
  return t;
}

// Orbits of the relabelling action computed on point names.
std::set<std::set<Tau>> orbit_oracle() {
  const std::vector<std::array<int, 5>> d4 = {
      {0, 1, 2, 3, 4}, {0, 2, 1, 3, 4}, {0, 1, 2, 4, 3}, {0, 2, 1, 4, 3},
      {0, 3, 4, 1, 2}, {0, 4, 3, 2, 1}, {0, 3, 4, 2, 1}, {0, 4, 3, 1, 2}};
  auto move = [](const std::array<int, 5>& g, const std::string& p) {
    return "P" + std::to_string(g[p[1] - '0']) + std::to_string(g[p[2] - '0']);
  };
  std::set<std::set<Tau>> orbits;
  for (const auto& b : all_bijections()) {
    Tau t = tau_of(b);
    std::set<Tau> orbit;
    for (const auto& g : d4) {
      Tau moved;
      for (const auto& [x, y] : t) moved[move(g, x)] = move(g, y);
      orbit.insert(moved);
    }
    orbits.insert(orbit);
  }
  return orbits;
}

std::vector<std::size_t> shape(const std::vector<std::vector<std::string>>& cusps) {
  std::vector<std::size_t> s;
  for (const auto& c : cusps) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

const TableRow& row(const std::string& label) {
  for (const auto& r : reference_table())
    if (r.label == label) return r;
  throw std::runtime_error("no row " + label);
}

}  // namespace

TEST_CASE("bijections") {
  auto all = all_bijections();
  CHECK(all.size() == 36);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  auto b = bijections_from_images({"P23", "P21", "P24"}, {"P41", "P43", "P42"});
  CHECK(to_string(b) == "phi12: P12->P23 P13->P21 P14->P24, phi34: P31->P41 P32->P43 P34->P42");
  CHECK_THROWS_AS(bijections_from_images({"P23", "P23", "P24"}, {"P41", "P43", "P42"}), Error);
  CHECK_THROWS_AS(bijections_from_images({"P31", "P21", "P24"}, {"P41", "P43", "P42"}), Error);
}

TEST_CASE("every four-lines gluing is valid") {
  for (const auto& b : all_bijections()) {
    auto g = validate_gluing(build_four_lines(b));
    CHECK(g.dbar_connected());
    CHECK(g.point_count() == 12);
    for (std::size_t p = 0; p < g.point_count(); ++p) {
      CHECK(g.tau(g.tau(p)) == p);
      CHECK(g.tau(p) != p);
    }
  }
}

TEST_CASE("the symmetry group") {
  CHECK(d4_elements().size() == 8);
  CHECK(in_d4(parse_permutation("(13)(24)")));
  CHECK_FALSE(in_d4(parse_permutation("(13)")));
  CHECK_FALSE(in_d4(parse_permutation("(123)")));
  for (const auto& s : {"()", "(12)", "(34)", "(12)(34)", "(13)(24)", "(14)(23)", "(1324)", "(1423)"})
    CHECK(format_permutation(parse_permutation(s)) == s);
  CHECK(generated_subgroup({parse_permutation("(12)(13)(24)")}).size() == 4);
  CHECK(generated_subgroup({parse_permutation("(12)"), parse_permutation("(34)"),
                            parse_permutation("(13)(24)")}) .size() == 8);
  CHECK(conjugate_in_d4({parse_permutation("()"), parse_permutation("(12)")},
                        {parse_permutation("()"), parse_permutation("(34)")}));
  CHECK_FALSE(conjugate_in_d4({parse_permutation("()"), parse_permutation("(12)(34)")},
                              {parse_permutation("()"), parse_permutation("(34)")}));
}

TEST_CASE("d4 action") {
  const auto id = parse_permutation("()");
  const auto swap12 = parse_permutation("(12)");
  for (const auto& b : all_bijections()) {
    CHECK(d4_action(id, b) == b);
    CHECK(d4_action(swap12, d4_action(swap12, b)) == b);
    for (const auto& g : d4_elements())
      for (const auto& h : d4_elements())
        CHECK(d4_action(compose(g, h), b) == d4_action(h, d4_action(g, b)));
  }
  try {
    d4_action(parse_permutation("(13)"), all_bijections().front());
    FAIL("expected NotInD4");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInD4);
  }
  CHECK(orbit(row("X0.2").representative).size() == 8);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(row("X3.1").representative).size() == 8);
  CHECK(automorphism_group(row("X1.4").representative) ==
        generated_subgroup({parse_permutation("(13)(24)"), parse_permutation("(14)(23)")}));
  CHECK(automorphism_group(row("X0.2").representative).size() == 1);
  CHECK(automorphism_group(row("X0.1").representative) ==
        generated_subgroup({parse_permutation("(14)(23)")}));
}

TEST_CASE("X1.3 stabilizer is generated by (34)") {
  auto stab = automorphism_group(row("X1.3").representative);
  CHECK(stab == generated_subgroup({parse_permutation("(34)")}));
  CHECK_FALSE(conjugate_in_d4(stab, generated_subgroup(row("X1.3").aut_generators)));
}

TEST_CASE("orbit decomposition") {
  auto records = enumerate_orbits();
  REQUIRE(records.size() == 11);
  std::size_t total = 0;
  std::set<LinePairBijections> covered;
  for (const auto& r : records) {
    total += r.orbit_size;
    CHECK(r.orbit_size * r.stabilizer.size() == 8);
    CHECK(r.members.size() == r.orbit_size);
    CHECK(r.representative == *std::min_element(r.members.begin(), r.members.end()));
    CHECK(r.stabilizer == automorphism_group(r.representative));
    covered.insert(r.members.begin(), r.members.end());
  }
  CHECK(total == 36);
  CHECK(covered.size() == 36);

  std::set<std::set<Tau>> computed;
  for (const auto& r : records) {
    std::set<Tau> orbit;
    for (const auto& m : r.members) orbit.insert(tau_of(m));
    computed.insert(orbit);
  }
  CHECK(computed == orbit_oracle());

  const auto& table = reference_table();
  for (std::size_t i = 0; i < records.size(); ++i) {
    REQUIRE(records[i].table_label.has_value());
    CHECK(*records[i].table_label == table[i].label);
    CHECK(std::binary_search(records[i].members.begin(), records[i].members.end(),
                             table[i].representative));
  }
}

TEST_CASE("invariants are constant along orbits") {
  ReportOptions options;
  options.with_fingerprint = true;
  for (const auto& r : enumerate_orbits(options)) {
    for (const auto& m : r.members) {
      auto rep = invariant_report(validate_gluing(build_four_lines(m)), options);
      CHECK(rep.chi == r.report.chi);
      CHECK(rep.q == r.report.q);
      CHECK(rep.p_g == r.report.p_g);
      CHECK(rep.k_squared == r.report.k_squared);
      CHECK(shape(rep.cusps) == shape(r.report.cusps));
      CHECK(rep.homology == r.report.homology);
      REQUIRE(rep.pi1.has_value());
      CHECK(rep.pi1->abelianization == r.report.pi1->abelianization);
      CHECK(rep.pi1->fingerprint == r.report.pi1->fingerprint);
      CHECK(automorphism_group(m).size() == r.stabilizer.size());
    }
  }
}

TEST_CASE("table representatives") {
  for (const auto& r : reference_table()) {
    auto g = validate_gluing(build_four_lines(r.representative));
    CHECK_MESSAGE(cusp_node_names(g, cusps(g)) == r.cusps, r.label);
    CHECK(euler_characteristics(g).chi_x == r.chi);
    CHECK(irregularity(g).q == r.q);
  }
}

TEST_CASE("X1.2 and X1.3 lie in disjoint orbits") {
  auto a = orbit(row("X1.2").representative);
  auto b = orbit(row("X1.3").representative);
  std::vector<LinePairBijections> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  CHECK(common.empty());
  auto ra = invariant_report(validate_gluing(build_four_lines(row("X1.2").representative)));
  auto rb = invariant_report(validate_gluing(build_four_lines(row("X1.3").representative)));
  CHECK(ra.chi == rb.chi);
  CHECK(ra.cusps == rb.cusps);
}

TEST_CASE("the two irregular orbits") {
  ReportOptions options;
  options.with_fingerprint = true;
  std::vector<OrbitRecord> irregular;
  for (auto& r : enumerate_orbits(options))
    if (r.report.q > 0) irregular.push_back(r);
  REQUIRE(irregular.size() == 2);
  CHECK(irregular[0].report.chi == 0);
  CHECK(irregular[1].report.chi == 0);
  CHECK(irregular[0].report.homology == irregular[1].report.homology);
  const auto& f0 = irregular[0].report.pi1->fingerprint->entries;
  const auto& f1 = irregular[1].report.pi1->fingerprint->entries;
  auto a4 = [](const std::vector<FingerprintEntry>& f) {
    return std::find_if(f.begin(), f.end(), [](const auto& e) { return e.group == "A4"; })->count;
  };
  CHECK(a4(f0).surjective > 0);
  CHECK(a4(f1).surjective == 0);
}
