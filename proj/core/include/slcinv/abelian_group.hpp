#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace slcinv {

using BigInt = boost::multiprecision::cpp_int;

// Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk with
// d1 | d2 | ... | dk and every di >= 2.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  static AbelianGroup free(std::size_t rank) { return AbelianGroup{rank, {}}; }

  // Builds the canonical form from arbitrary cyclic orders; entries 1 are
  // dropped and entries 0 count as free summands.
  static AbelianGroup from_cyclic_orders(std::size_t free_rank,
                                         const std::vector<BigInt>& orders);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }

  // "0", "Z", "Z^2 + Z/2 + Z/6", ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

}  // namespace slcinv
