#include "fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "slcinv/json_io.hpp"

namespace fixtures {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(SLCINV_TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

slcinv::GluingData load_data(const std::string& name) {
  return slcinv::parse_gluing_json(read_data(name));
}

slcinv::ValidatedGluing load_valid(const std::string& name) {
  return slcinv::validate_gluing(load_data(name));
}

}  // namespace fixtures

namespace fixtures {

slcinv::NormalComponent rational_surface() {
  slcinv::NormalComponent n;
  n.id = "S";
  n.h2_rank = 1;
  n.k_plus_d_sq = 0;
  return n;
}

slcinv::GluingData random_gluing(std::mt19937& rng, std::size_t pairs) {
  slcinv::GluingData g;
  g.normalization.push_back(rational_surface());
  std::vector<std::string> all;
  for (std::size_t k = 0; k < pairs; ++k) {
    std::size_t n = 1 + rng() % 4;
    slcinv::CurveComponent a, b;
    a.id = "A" + std::to_string(k);
    b.id = "B" + std::to_string(k);
    a.on = b.on = "S";
    a.h2_class = b.h2_class = {1};
    for (std::size_t i = 0; i < n; ++i) {
      a.marked_points.push_back(a.id + "_" + std::to_string(i));
      b.marked_points.push_back(b.id + "_" + std::to_string(i));
    }
    std::vector<std::string> image = b.marked_points;
    std::shuffle(image.begin(), image.end(), rng);
    for (std::size_t i = 0; i < n; ++i) g.point_involution.emplace_back(a.marked_points[i], image[i]);
    g.component_involution.emplace_back(a.id, b.id);
    all.insert(all.end(), a.marked_points.begin(), a.marked_points.end());
    all.insert(all.end(), b.marked_points.begin(), b.marked_points.end());
    g.curve_components.push_back(a);
    g.curve_components.push_back(b);
  }
  std::shuffle(all.begin(), all.end(), rng);
  for (std::size_t i = 0; i + 1 < all.size(); i += 2) g.node_pairing.emplace_back(all[i], all[i + 1]);
  return g;
}

}  // namespace fixtures
