#pragma once

// Small permutation groups and homomorphism counting from finitely presented
// groups into them.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "slcinv/words.hpp"

namespace slcinv {

// Images of 0..degree-1.
using Permutation = std::vector<std::uint8_t>;

// Composition is left to right: (a * b)(x) = b(a(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation invert(const Permutation& a);

class FiniteGroup {
 public:
  // Closure of `generators` inside Sym(degree).
  static FiniteGroup generate(std::string name, std::size_t degree,
                              const std::vector<Permutation>& generators);

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t identity() const { return identity_; }

  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  // Throws std::out_of_range if p is not an element.
  std::size_t index_of(const Permutation& p) const;

  // Order of the subgroup generated by the given elements.
  std::size_t subgroup_order(const std::vector<std::size_t>& gens) const;

  // Image of a word under generator images `images` (indices of elements).
  std::size_t evaluate(const Word& w, const std::vector<std::size_t>& images) const;

 private:
  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;  // sorted
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

const std::vector<std::string>& default_catalog_names();
FiniteGroup catalog_group(const std::string& name);
std::vector<FiniteGroup> catalog(const std::vector<std::string>& names);

struct HomCount {
  std::uint64_t total = 0;
  std::uint64_t surjective = 0;

  friend bool operator==(const HomCount&, const HomCount&) = default;
};

inline constexpr std::uint64_t kDefaultHomBudget = 100'000'000;

// Counts homomorphisms p -> G by exhaustive search over generator images.
// Throws BudgetExceeded if |G|^#generators exceeds `budget`.
HomCount hom_count(const GroupPresentation& p, const FiniteGroup& g,
                   std::uint64_t budget = kDefaultHomBudget);

struct FingerprintEntry {
  std::string group;
  HomCount count;

  friend bool operator==(const FingerprintEntry&, const FingerprintEntry&) = default;
};

struct Fingerprint {
  std::vector<FingerprintEntry> entries;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const GroupPresentation& p, const std::vector<FiniteGroup>& groups,
                        std::uint64_t budget = kDefaultHomBudget);

}  // namespace slcinv
