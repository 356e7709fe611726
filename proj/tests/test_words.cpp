#include <random>

#include "doctest.h"
#include "slcinv/error.hpp"
#include "slcinv/finite_group.hpp"
#include "slcinv/words.hpp"

using namespace slcinv;

namespace {

const std::vector<std::string> kAbcd{"a", "b", "c", "d"};

GroupPresentation make(std::vector<std::string> gens, const std::vector<std::string>& rels) {
  GroupPresentation p;
  p.generators = std::move(gens);
  for (const auto& r : rels) p.relators.push_back(parse_word(r, p.generators));
  return p;
}

Word random_word(std::mt19937& rng, std::size_t gens, std::size_t max_len) {
  Word w;
  std::size_t len = 1 + rng() % max_len;
  for (std::size_t i = 0; i < len; ++i) w.push_back(Letter{rng() % gens, rng() % 2 ? 1 : -1});
  return w;
}

// Tietze moves written out by hand: conjugate a relator, multiply two
// relators, and introduce a redundant generator x = w.
GroupPresentation scramble(const GroupPresentation& p, std::mt19937& rng) {
  GroupPresentation q = p;
  const std::size_t n = q.generators.size();
  if (!q.relators.empty()) {
    std::size_t i = rng() % q.relators.size();
    Word c = random_word(rng, n, 3);
    q.relators[i] = concat(concat(c, q.relators[i]), inverse(c));
    std::size_t j = rng() % q.relators.size();
    if (j != i) q.relators[j] = concat(q.relators[j], q.relators[i]);
  }
  Word w = random_word(rng, n, 3);
  q.generators.push_back("x" + std::to_string(n));
  q.relators.push_back(concat(Word{Letter{n, -1}}, w));
  return q;
}

std::vector<FiniteGroup> small_catalog() {
  return catalog({"C2", "C3", "C4", "C5", "S3", "D4", "Q8", "A4"});
}

}  // namespace

TEST_CASE("parse and format words") {
  Word w = parse_word("a^-1 b^2 c", kAbcd);
  CHECK(w.size() == 4);
  CHECK(format_word(w, kAbcd) == "a^-1 b^2 c");
  CHECK(parse_word("1", kAbcd).empty());
  CHECK(parse_word("  ", kAbcd).empty());
  CHECK(format_word({}, kAbcd) == "1");
  CHECK(format_word(parse_word("d d b b d^-1 b^-1", kAbcd), kAbcd) == "d^2 b^2 d^-1 b^-1");
  CHECK_THROWS_AS(parse_word("a^x", kAbcd), Error);
  CHECK_THROWS_AS(parse_word("e", kAbcd), Error);
}

TEST_CASE("free and cyclic reduction") {
  CHECK(format_word(free_reduce(parse_word("a a^-1 b c c^-1", kAbcd)), kAbcd) == "b");
  CHECK(format_word(cyclic_reduce(parse_word("b a c a^-1 b^-1", kAbcd)), kAbcd) == "c");
  CHECK(cyclic_reduce(parse_word("a b b^-1 a^-1", kAbcd)).empty());
  Word w = parse_word("a b^-1 c", kAbcd);
  CHECK(free_reduce(concat(w, inverse(w))).empty());
  CHECK(exponent_sums(parse_word("a b a^-1 b^3", kAbcd), 4) == std::vector<long long>{0, 4, 0, 0});
}

TEST_CASE("abelianization") {
  CHECK(abelianization(make({"a", "b"}, {"a^2", "b^3", "a b a^-1 b^-1"})).to_string() == "Z/6");
  CHECK(abelianization(make({"a", "b"}, {})).to_string() == "Z^2");
  CHECK(abelianization(make({"A", "B"}, {"A^-1 B^-1 A^2 B^2"})).to_string() == "Z");
}

TEST_CASE("presentation check") {
  GroupPresentation p = make({"a"}, {"a^2"});
  p.relators.push_back(Word{Letter{3, 1}});
  CHECK_THROWS_AS(p.check(), Error);
}

TEST_CASE("both irregular presentations simplify to one relator of length 6") {
  auto x01 = make(kAbcd, {"a c a", "a b c d^-1 a", "a^-1 d d b^-1"});
  auto x02 = make(kAbcd, {"a c a b", "a c d d b", "a b c d b"});
  for (const auto& p : {x01, x02}) {
    auto s = tietze_simplify(p);
    CHECK(s.generators.size() == 2);
    REQUIRE(s.relators.size() == 1);
    CHECK(s.relators[0].size() == 6);
    CHECK(abelianization(s) == abelianization(p));
    CHECK(abelianization(s).to_string() == "Z");
  }
}

TEST_CASE("hand-derived four-generator presentations") {
  const std::vector<std::string> greek{"alpha", "beta", "gamma", "delta"};
  auto x01 = make(greek, {"alpha^2 gamma", "delta^-1 gamma^-1 beta gamma", "alpha beta delta^-2"});
  auto x01_variant = make(greek, {"alpha^2 gamma", "delta gamma^-1 beta^-1 gamma", "alpha beta delta^-2"});
  auto x02 = make(greek, {"delta^2 alpha^-1", "alpha beta alpha gamma", "delta gamma^-1 beta^-1 gamma"});
  for (const auto& p : {x01, x01_variant, x02}) {
    auto s = tietze_simplify(p);
    CHECK(s.generators.size() == 2);
    REQUIRE(s.relators.size() == 1);
    CHECK(s.relators[0].size() == 6);
  }
  auto a4 = catalog({"A4"});
  auto witness = make({"A", "B"}, {"A^-1 B^-1 A^2 B^2"});
  CHECK(fingerprint(tietze_simplify(x01), a4) == fingerprint(witness, a4));
  CHECK(fingerprint(x02, a4).entries[0].count.surjective == 0);
}

TEST_CASE("elimination only pass") {
  auto p = make({"a", "b"}, {"a b^-1"});
  auto e = eliminate_generators(p);
  CHECK(e.generators.size() == 1);
  CHECK(e.relators.empty());
}

TEST_CASE("fingerprints survive Tietze moves on random presentations") {
  std::mt19937 rng(424242);
  auto groups = small_catalog();
  for (int trial = 0; trial < 50; ++trial) {
    GroupPresentation p;
    std::size_t gens = 1 + rng() % 2;
    for (std::size_t i = 0; i < gens; ++i) p.generators.push_back(std::string(1, char('a' + i)));
    std::size_t rels = 1 + rng() % 2;
    for (std::size_t r = 0; r < rels; ++r) p.relators.push_back(random_word(rng, gens, 6));

    auto base = fingerprint(p, groups);
    auto moved = scramble(p, rng);
    CHECK(fingerprint(moved, groups) == base);
    auto simplified = tietze_simplify(moved);
    CHECK(simplified.total_length() <= moved.total_length());
    CHECK(fingerprint(simplified, groups) == base);
    CHECK(abelianization(simplified) == abelianization(p));
  }
}
