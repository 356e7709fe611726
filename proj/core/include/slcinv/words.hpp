#pragma once

// Words in free groups and finite group presentations.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "slcinv/abelian_group.hpp"
#include "slcinv/intlinalg.hpp"

namespace slcinv {

struct Letter {
  std::size_t gen = 0;
  int exp = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word free_reduce(const Word& w);
// Free reduction followed by stripping conjugating prefix/suffix pairs.
Word cyclic_reduce(const Word& w);
// Exponent sum of every generator in w.
std::vector<long long> exponent_sums(const Word& w, std::size_t generator_count);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t total_length() const;
  // Throws SchemaError if a letter refers to a generator out of range.
  void check() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// "a^-1 b^-1 a^2 b^2": whitespace separated powers of generator names.
// The empty string (or "1") is the empty word.
Word parse_word(std::string_view text, const std::vector<std::string>& generators);
std::string format_word(const Word& w, const std::vector<std::string>& generators);

// Generators x relators matrix of exponent sums.
IntegerMatrix exponent_matrix(const GroupPresentation& p);
AbelianGroup abelianization(const GroupPresentation& p);

// Greedy Tietze simplification. Alternates two passes until neither changes
// the presentation:
//  1. reduce relators cyclically, drop empty ones, and eliminate a generator
//     occurring exactly once in some relator (the one whose occurrence sits in
//     the shortest relator, ties by generator index);
//  2. apply the single substitution x -> x y^{+-1} or x -> y^{+-1} x that most
//     shortens the total relator length, while one exists.
// Both moves preserve the presented group up to isomorphism.
GroupPresentation tietze_simplify(const GroupPresentation& p);

// Only the elimination pass of tietze_simplify.
GroupPresentation eliminate_generators(const GroupPresentation& p);

}  // namespace slcinv
