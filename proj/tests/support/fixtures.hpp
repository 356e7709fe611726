#pragma once

#include <random>
#include <string>

#include "slcinv/gluing.hpp"

namespace fixtures {

std::string read_data(const std::string& name);
slcinv::GluingData load_data(const std::string& name);
slcinv::ValidatedGluing load_valid(const std::string& name);

// Simply connected surface "S" with H2 = Z and q = 0.
slcinv::NormalComponent rational_surface();

// Random gluing on rational_surface(): `pairs` tau-swapped pairs of rational
// curves with 1..4 marked points each, a random perfect matching as sigma and
// random bijections as tau.
slcinv::GluingData random_gluing(std::mt19937& rng, std::size_t pairs);

}  // namespace fixtures
