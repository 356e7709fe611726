#include "slcinv/finite_group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "slcinv/error.hpp"

namespace slcinv {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

Permutation invert(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<std::uint8_t>(x);
  return out;
}

FiniteGroup FiniteGroup::generate(std::string name, std::size_t degree,
                                  const std::vector<Permutation>& generators) {
  FiniteGroup g;
  g.name_ = std::move(name);
  g.degree_ = degree;
  Permutation id(degree);
  std::iota(id.begin(), id.end(), std::uint8_t{0});

  std::vector<Permutation> found{id};
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& s : generators) {
      Permutation next = compose(found[i], s);
      if (std::find(found.begin(), found.end(), next) == found.end())
        found.push_back(std::move(next));
    }
  std::sort(found.begin(), found.end());
  g.elements_ = std::move(found);
  g.identity_ = g.index_of(id);

  const std::size_t n = g.order();
  g.table_.resize(n * n);
  g.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    g.inverse_[a] = g.index_of(invert(g.elements_[a]));
    for (std::size_t b = 0; b < n; ++b)
      g.table_[a * n + b] = g.index_of(compose(g.elements_[a], g.elements_[b]));
  }
  return g;
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    throw std::out_of_range("permutation is not an element of " + name_);
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FiniteGroup::subgroup_order(const std::vector<std::size_t>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<std::size_t> queue{identity_};
  in[identity_] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t s : gens) {
      std::size_t next = multiply(queue[i], s);
      if (!in[next]) {
        in[next] = true;
        queue.push_back(next);
      }
    }
  return queue.size();
}

std::size_t FiniteGroup::evaluate(const Word& w, const std::vector<std::size_t>& images) const {
  std::size_t acc = identity_;
  for (const Letter& l : w) {
    std::size_t x = images[l.gen];
    acc = multiply(acc, l.exp == 1 ? x : inverse_[x]);
  }
  return acc;
}

namespace {

Permutation cycle_perm(std::size_t degree, std::initializer_list<std::uint8_t> cycle) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<std::uint8_t> c(cycle);
  for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

FiniteGroup cyclic(std::size_t n) {
  Permutation p(n);
  for (std::size_t x = 0; x < n; ++x) p[x] = static_cast<std::uint8_t>((x + 1) % n);
  return FiniteGroup::generate("C" + std::to_string(n), n, {p});
}

FiniteGroup dihedral(const std::string& name, std::size_t n) {
  Permutation rot(n), refl(n);
  for (std::size_t x = 0; x < n; ++x) {
    rot[x] = static_cast<std::uint8_t>((x + 1) % n);
    refl[x] = static_cast<std::uint8_t>((n - x) % n);
  }
  return FiniteGroup::generate(name, n, {rot, refl});
}

// Right regular representation of the quaternion group on
// {1, i, j, k, -1, -i, -j, -k} (indices 0..7).
FiniteGroup quaternion() {
  // unit products among {1, i, j, k}: sign and result
  constexpr std::array<std::array<int, 4>, 4> unit = {{
      {0, 1, 2, 3},
      {1, 4 + 0, 3, 4 + 2},
      {2, 4 + 3, 4 + 0, 1},
      {3, 2, 4 + 1, 4 + 0},
  }};
  auto mul = [&](int a, int b) {
    int sign = (a >= 4) ^ (b >= 4);
    int r = unit[a % 4][b % 4];
    if (r >= 4) sign ^= 1;
    return (r % 4) + 4 * sign;
  };
  Permutation ri(8), rj(8);
  for (int x = 0; x < 8; ++x) {
    ri[x] = static_cast<std::uint8_t>(mul(x, 1));
    rj[x] = static_cast<std::uint8_t>(mul(x, 2));
  }
  return FiniteGroup::generate("Q8", 8, {ri, rj});
}

}  // namespace

const std::vector<std::string>& default_catalog_names() {
  static const std::vector<std::string> names = {
      "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
      "S3", "D4", "Q8", "A4", "D6", "S4", "A5"};
  return names;
}

FiniteGroup catalog_group(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'C') {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      n = 0;
    }
    if (n >= 2 && n <= 12 && name == "C" + std::to_string(n)) return cyclic(static_cast<std::size_t>(n));
  }
  if (name == "S3") return FiniteGroup::generate("S3", 3, {cycle_perm(3, {0, 1}), cycle_perm(3, {0, 1, 2})});
  if (name == "D4") return dihedral("D4", 4);
  if (name == "Q8") return quaternion();
  if (name == "A4") return FiniteGroup::generate("A4", 4, {cycle_perm(4, {0, 1, 2}), cycle_perm(4, {1, 2, 3})});
  if (name == "D6") return dihedral("D6", 6);
  if (name == "S4") return FiniteGroup::generate("S4", 4, {cycle_perm(4, {0, 1}), cycle_perm(4, {0, 1, 2, 3})});
  if (name == "A5")
    return FiniteGroup::generate("A5", 5, {cycle_perm(5, {0, 1, 2}), cycle_perm(5, {0, 1, 2, 3, 4})});
  throw Error(Errc::UnknownGroup, "no catalog group named '" + name + "'");
}

std::vector<FiniteGroup> catalog(const std::vector<std::string>& names) {
  std::vector<FiniteGroup> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(catalog_group(n));
  return out;
}

HomCount hom_count(const GroupPresentation& p, const FiniteGroup& g, std::uint64_t budget) {
  p.check();
  const std::size_t n = p.generators.size();
  const std::uint64_t order = g.order();
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (tuples > budget / order) {
      throw Error(Errc::BudgetExceeded,
                  std::to_string(order) + "^" + std::to_string(n) +
                      " generator images into " + g.name() + " exceed the budget of " +
                      std::to_string(budget) + "; simplify the presentation first");
    }
    tuples *= order;
  }

  // A relator is checked as soon as all generators it mentions are assigned;
  // this prunes the search without changing the count.
  std::vector<std::vector<const Word*>> ready(n + 1);
  for (const auto& r : p.relators) {
    std::size_t level = 0;
    for (const Letter& l : r) level = std::max(level, l.gen + 1);
    ready[level].push_back(&r);
  }
  for (const Word* r : ready[0])
    if (g.evaluate(*r, {}) != g.identity()) return HomCount{};

  HomCount count;
  std::vector<std::size_t> images(n, 0);
  auto record = [&] {
    ++count.total;
    if (g.subgroup_order(images) == g.order()) ++count.surjective;
  };
  if (n == 0) {
    record();
    return count;
  }

  // Iterative depth-first search over generator images.
  std::size_t depth = 0;
  images[0] = 0;
  for (;;) {
    bool ok = true;
    for (const Word* r : ready[depth + 1])
      if (g.evaluate(*r, images) != g.identity()) {
        ok = false;
        break;
      }
    if (ok && depth + 1 == n) record();
    if (ok && depth + 1 < n) {
      ++depth;
      images[depth] = 0;
      continue;
    }
    while (++images[depth] == order) {
      if (depth == 0) return count;
      --depth;
    }
  }
}

Fingerprint fingerprint(const GroupPresentation& p, const std::vector<FiniteGroup>& groups,
                        std::uint64_t budget) {
  Fingerprint f;
  for (const auto& g : groups) f.entries.push_back({g.name(), hom_count(p, g, budget)});
  return f;
}

}  // namespace slcinv
