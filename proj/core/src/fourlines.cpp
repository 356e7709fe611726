#include "slcinv/fourlines.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "slcinv/error.hpp"

namespace slcinv::fourlines {

namespace {

// Indices j != i of the points on line i, ascending (1-based).
std::array<int, 3> others(int line) {
  std::array<int, 3> out{};
  int k = 0;
  for (int j = 1; j <= 4; ++j)
    if (j != line) out[k++] = j;
  return out;
}

std::string point_name(int i, int j) { return "P" + std::to_string(i) + std::to_string(j); }

using Point = std::pair<int, int>;  // (line, other line)

std::map<Point, Point> involution_of(const LinePairBijections& b) {
  std::map<Point, Point> tau;
  auto add = [&tau](int from, int to, const std::array<std::uint8_t, 3>& phi) {
    auto src = others(from);
    auto dst = others(to);
    for (int k = 0; k < 3; ++k) {
      Point x{from, src[k]};
      Point y{to, dst[phi[k]]};
      tau[x] = y;
      tau[y] = x;
    }
  };
  add(1, 2, b.phi12);
  add(3, 4, b.phi34);
  return tau;
}

std::uint8_t index_in(int line, int other) {
  auto o = others(line);
  return static_cast<std::uint8_t>(std::find(o.begin(), o.end(), other) - o.begin());
}

std::pair<int, int> parse_point(const std::string& s) {
  if (s.size() != 3 || s[0] != 'P' || s[1] < '1' || s[1] > '4' || s[2] < '1' || s[2] > '4' ||
      s[1] == s[2])
    throw Error(Errc::ParseError, "not a four-lines point: '" + s + "'");
  return {s[1] - '0', s[2] - '0'};
}

}  // namespace

LinePairBijections bijections_from_images(const std::array<std::string, 3>& images12,
                                          const std::array<std::string, 3>& images34) {
  LinePairBijections b;
  for (int k = 0; k < 3; ++k) {
    auto [l12, o12] = parse_point(images12[k]);
    auto [l34, o34] = parse_point(images34[k]);
    if (l12 != 2 || l34 != 4) throw Error(Errc::ParseError, "images must lie on L2 and L4");
    b.phi12[k] = index_in(2, o12);
    b.phi34[k] = index_in(4, o34);
  }
  auto is_perm = [](std::array<std::uint8_t, 3> a) {
    std::sort(a.begin(), a.end());
    return a == std::array<std::uint8_t, 3>{0, 1, 2};
  };
  if (!is_perm(b.phi12) || !is_perm(b.phi34))
    throw Error(Errc::NonInvolutive, "images do not form bijections");
  return b;
}

std::string to_string(const LinePairBijections& b) {
  std::string s = "phi12: ";
  auto src12 = others(1), dst12 = others(2), src34 = others(3), dst34 = others(4);
  for (int k = 0; k < 3; ++k)
    s += point_name(1, src12[k]) + "->" + point_name(2, dst12[b.phi12[k]]) + (k < 2 ? " " : "");
  s += ", phi34: ";
  for (int k = 0; k < 3; ++k)
    s += point_name(3, src34[k]) + "->" + point_name(4, dst34[b.phi34[k]]) + (k < 2 ? " " : "");
  return s;
}

std::vector<LinePairBijections> all_bijections() {
  std::vector<std::array<std::uint8_t, 3>> s3;
  std::array<std::uint8_t, 3> p{0, 1, 2};
  do s3.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<LinePairBijections> out;
  for (const auto& a : s3)
    for (const auto& b : s3) out.push_back(LinePairBijections{a, b});
  return out;
}

GluingData build_four_lines(const LinePairBijections& b) {
  GluingData g;
  NormalComponent plane;
  plane.id = "P2";
  plane.chi_O = 1;
  plane.q = 0;
  plane.simply_connected = true;
  plane.h2_rank = 1;
  plane.h4_rank = 1;
  plane.k_plus_d_sq = 1;  // (-3H + 4H)^2
  g.normalization.push_back(plane);

  for (int i = 1; i <= 4; ++i) {
    CurveComponent c;
    c.id = "L" + std::to_string(i);
    c.on = "P2";
    c.genus = 0;
    for (int j : others(i)) c.marked_points.push_back(point_name(i, j));
    c.h2_class = {1};
    g.curve_components.push_back(std::move(c));
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) g.node_pairing.emplace_back(point_name(i, j), point_name(j, i));
  g.component_involution = {{"L1", "L2"}, {"L3", "L4"}};
  for (const auto& [x, y] : involution_of(b))
    if (x.first == 1 || x.first == 3)
      g.point_involution.emplace_back(point_name(x.first, x.second), point_name(y.first, y.second));
  return g;
}

const std::vector<IndexPermutation>& d4_elements() {
  static const std::vector<IndexPermutation> elements = [] {
    std::vector<IndexPermutation> out;
    IndexPermutation p{1, 2, 3, 4};
    do {
      if (in_d4(p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return elements;
}

bool in_d4(const IndexPermutation& g) {
  IndexPermutation sorted = g;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != IndexPermutation{1, 2, 3, 4}) return false;
  auto pair_of = [](int x) { return x <= 2 ? 0 : 1; };
  // {1,2} must go to a block and {3,4} to the other one.
  return pair_of(g[0]) == pair_of(g[1]) && pair_of(g[2]) == pair_of(g[3]) &&
         pair_of(g[0]) != pair_of(g[2]);
}

IndexPermutation compose(const IndexPermutation& first, const IndexPermutation& second) {
  IndexPermutation out{};
  for (int k = 0; k < 4; ++k) out[k] = second[first[k] - 1];
  return out;
}

std::string format_permutation(const IndexPermutation& g) {
  std::string s;
  std::array<bool, 4> seen{};
  for (int start = 0; start < 4; ++start) {
    if (seen[start] || g[start] == start + 1) continue;
    s += "(";
    for (int x = start; !seen[x]; x = g[x] - 1) {
      seen[x] = true;
      s += std::to_string(x + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

IndexPermutation parse_permutation(const std::string& cycles) {
  IndexPermutation g{1, 2, 3, 4};
  std::vector<int> cycle;
  auto close = [&] {
    for (std::size_t k = 0; k < cycle.size(); ++k)
      g[cycle[k] - 1] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    cycle.clear();
  };
  IndexPermutation result{1, 2, 3, 4};
  for (char ch : cycles) {
    if (ch == '(') {
      cycle.clear();
      g = {1, 2, 3, 4};
    } else if (ch == ')') {
      close();
      // cycles written left to right are applied right to left
      result = compose(g, result);
    } else if (ch >= '1' && ch <= '4') {
      cycle.push_back(ch - '0');
    } else if (ch != ' ') {
      throw Error(Errc::ParseError, "bad permutation '" + cycles + "'");
    }
  }
  return result;
}

LinePairBijections d4_action(const IndexPermutation& g, const LinePairBijections& b) {
  if (!in_d4(g)) throw Error(Errc::NotInD4, format_permutation(g) + " does not preserve {{1,2},{3,4}}");
  auto tau = involution_of(b);
  std::map<Point, Point> moved;
  for (const auto& [x, y] : tau)
    moved[{g[x.first - 1], g[x.second - 1]}] = {g[y.first - 1], g[y.second - 1]};
  LinePairBijections out;
  auto src12 = others(1), src34 = others(3);
  for (int k = 0; k < 3; ++k) {
    out.phi12[k] = index_in(2, moved.at({1, src12[k]}).second);
    out.phi34[k] = index_in(4, moved.at({3, src34[k]}).second);
  }
  return out;
}

std::vector<LinePairBijections> orbit(const LinePairBijections& b) {
  std::vector<LinePairBijections> out;
  for (const auto& g : d4_elements()) out.push_back(d4_action(g, b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IndexPermutation> automorphism_group(const LinePairBijections& b) {
  std::vector<IndexPermutation> out;
  for (const auto& g : d4_elements())
    if (d4_action(g, b) == b) out.push_back(g);
  return out;
}

std::vector<IndexPermutation> generated_subgroup(const std::vector<IndexPermutation>& gens) {
  std::vector<IndexPermutation> out{IndexPermutation{1, 2, 3, 4}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : gens) {
      auto next = compose(out[i], s);
      if (std::find(out.begin(), out.end(), next) == out.end()) out.push_back(next);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexPermutation> generators_of(const std::vector<IndexPermutation>& subgroup) {
  std::vector<IndexPermutation> sorted = subgroup;
  std::sort(sorted.begin(), sorted.end());
  std::vector<IndexPermutation> gens;
  std::vector<IndexPermutation> span = generated_subgroup(gens);
  for (const auto& x : sorted) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = generated_subgroup(gens);
  }
  return gens;
}

bool conjugate_in_d4(const std::vector<IndexPermutation>& a, const std::vector<IndexPermutation>& b) {
  std::vector<IndexPermutation> target = b;
  std::sort(target.begin(), target.end());
  for (const auto& d : d4_elements()) {
    IndexPermutation d_inv{};
    for (int k = 0; k < 4; ++k) d_inv[d[k] - 1] = static_cast<std::uint8_t>(k + 1);
    std::vector<IndexPermutation> conj;
    for (const auto& x : a) conj.push_back(compose(compose(d_inv, x), d));
    std::sort(conj.begin(), conj.end());
    if (conj == target) return true;
  }
  return false;
}

const std::vector<TableRow>& reference_table() {
  static const std::vector<TableRow> rows = [] {
    struct Raw {
      const char* label;
      std::int64_t chi;
      std::array<std::string, 3> phi12, phi34;
      std::vector<std::vector<std::string>> cusps;
      std::int64_t q;
      std::vector<std::string> aut;
      const char* aut_text;
    };
    const std::vector<Raw> raw = {
        {"X3.1", 3, {"P21", "P24", "P23"}, {"P42", "P41", "P43"},
         {{"P12"}, {"P34"}, {"P13", "P24"}, {"P23", "P14"}}, 0,
         {"(12)", "(34)", "(13)(24)"}, "D4"},
        {"X2.1", 2, {"P21", "P23", "P24"}, {"P41", "P42", "P43"},
         {{"P12"}, {"P34"}, {"P13", "P14", "P23", "P24"}}, 0,
         {"(12)", "(34)", "(13)(24)"}, "D4"},
        {"X2.2", 2, {"P21", "P23", "P24"}, {"P42", "P41", "P43"},
         {{"P12"}, {"P34"}, {"P13", "P14", "P23", "P24"}}, 0, {"(12)", "(34)"}, "<(12),(34)>"},
        {"X2.3", 2, {"P23", "P24", "P21"}, {"P42", "P41", "P43"},
         {{"P12", "P23", "P14"}, {"P13", "P24"}, {"P34"}}, 0, {"(12)(34)"}, "<(12)(34)>"},
        {"X1.1", 1, {"P21", "P23", "P24"}, {"P41", "P43", "P42"},
         {{"P12"}, {"P34", "P13", "P14", "P23", "P24"}}, 0, {"(34)"}, "<(34)>"},
        {"X1.2", 1, {"P21", "P23", "P24"}, {"P42", "P43", "P41"},
         {{"P12"}, {"P34", "P13", "P14", "P23", "P24"}}, 0, {"(12)(34)"}, "<(12)(34)>"},
        {"X1.3", 1, {"P21", "P24", "P23"}, {"P41", "P43", "P42"},
         {{"P12"}, {"P34", "P13", "P14", "P23", "P24"}}, 0, {"(12)(34)"}, "<(12)(34)>"},
        {"X1.4", 1, {"P23", "P24", "P21"}, {"P42", "P43", "P41"},
         {{"P12", "P34", "P14", "P23"}, {"P13", "P24"}}, 0,
         {"(13)(24)", "(14)(23)"}, "<(13)(24),(14)(23)>"},
        {"X1.5", 1, {"P23", "P24", "P21"}, {"P43", "P41", "P42"},
         {{"P12", "P23", "P14"}, {"P13", "P24", "P34"}}, 0, {"(12)(13)(24)"}, "<(12)(13)(24)>"},
        {"X0.1", 0, {"P23", "P21", "P24"}, {"P41", "P43", "P42"},
         {{"P12", "P34", "P13", "P14", "P23", "P24"}}, 1, {"(14)(23)"}, "<(14)(23)>"},
        {"X0.2", 0, {"P23", "P24", "P21"}, {"P41", "P43", "P42"},
         {{"P12", "P34", "P13", "P14", "P23", "P24"}}, 1, {}, "{0}"},
    };
    std::vector<TableRow> out;
    for (const auto& r : raw) {
      TableRow row;
      row.label = r.label;
      row.chi = r.chi;
      row.representative = bijections_from_images(r.phi12, r.phi34);
      for (auto c : r.cusps) {
        std::sort(c.begin(), c.end());
        row.cusps.push_back(std::move(c));
      }
      std::sort(row.cusps.begin(), row.cusps.end());
      row.q = r.q;
      for (const auto& a : r.aut) row.aut_generators.push_back(parse_permutation(a));
      row.aut_text = r.aut_text;
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

namespace {

struct LabelKey {
  std::int64_t chi;
  std::vector<std::size_t> shape;
  std::size_t aut_order;

  friend bool operator==(const LabelKey&, const LabelKey&) = default;
};

std::vector<std::size_t> shape_of(const std::vector<std::vector<std::string>>& cusps) {
  std::vector<std::size_t> s;
  for (const auto& c : cusps) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::vector<OrbitRecord> enumerate_orbits(const ReportOptions& options) {
  std::vector<OrbitRecord> records;
  std::vector<bool> covered(36, false);
  const auto all = all_bijections();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (covered[i]) continue;
    OrbitRecord rec;
    rec.members = orbit(all[i]);
    for (const auto& m : rec.members)
      covered[static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), m) - all.begin())] = true;
    rec.representative = rec.members.front();
    rec.orbit_size = rec.members.size();
    rec.stabilizer = automorphism_group(rec.representative);
    rec.report = invariant_report(validate_gluing(build_four_lines(rec.representative)), options);
    records.push_back(std::move(rec));
  }

  const auto& table = reference_table();
  std::vector<std::size_t> position(records.size(), table.size());
  for (std::size_t k = 0; k < records.size(); ++k) {
    auto& rec = records[k];
    LabelKey key{rec.report.chi, shape_of(rec.report.cusps), rec.stabilizer.size()};
    std::vector<std::size_t> candidates;
    for (std::size_t r = 0; r < table.size(); ++r) {
      LabelKey row_key{table[r].chi, shape_of(table[r].cusps),
                       generated_subgroup(table[r].aut_generators).size()};
      if (row_key == key) candidates.push_back(r);
    }
    if (candidates.size() > 1) {
      std::erase_if(candidates, [&](std::size_t r) {
        return !std::binary_search(rec.members.begin(), rec.members.end(),
                                   table[r].representative);
      });
    }
    if (candidates.size() > 1)
      throw Error(Errc::LabelAmbiguous, "orbit of " + to_string(rec.representative) +
                                            " matches several table rows");
    if (candidates.size() == 1) {
      rec.table_label = table[candidates.front()].label;
      position[k] = candidates.front();
    }
  }
  for (std::size_t a = 0; a < records.size(); ++a)
    for (std::size_t b = a + 1; b < records.size(); ++b)
      if (position[a] < table.size() && position[a] == position[b])
        throw Error(Errc::LabelAmbiguous, "table row " + table[position[a]].label +
                                              " matches two orbits");

  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (position[a] != position[b]) return position[a] < position[b];
    return records[a].representative < records[b].representative;
  });
  std::vector<OrbitRecord> sorted;
  for (std::size_t k : order) sorted.push_back(std::move(records[k]));
  return sorted;
}

}  // namespace slcinv::fourlines
