#include "slcinv/words.hpp"

#include <optional>

namespace slcinv {

namespace {

// Replaces every occurrence of generator `gen` by `image` (and its inverse for
// inverse letters). Letters are left untouched otherwise.
Word substitute(const Word& w, std::size_t gen, const Word& image) {
  Word out;
  Word image_inv = inverse(image);
  for (const Letter& l : w) {
    if (l.gen != gen) {
      out.push_back(l);
    } else {
      const Word& part = l.exp == 1 ? image : image_inv;
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

std::vector<Word> reduced_nonempty(const std::vector<Word>& relators) {
  std::vector<Word> out;
  for (const auto& r : relators) {
    Word c = cyclic_reduce(r);
    if (!c.empty()) out.push_back(std::move(c));
  }
  return out;
}

void drop_generator(GroupPresentation& p, std::size_t gen) {
  p.generators.erase(p.generators.begin() + static_cast<std::ptrdiff_t>(gen));
  for (auto& r : p.relators)
    for (auto& l : r)
      if (l.gen > gen) --l.gen;
}

struct Elimination {
  std::size_t relator;
  std::size_t gen;
  std::size_t position;
};

std::optional<Elimination> pick_elimination(const GroupPresentation& p) {
  std::optional<Elimination> best;
  for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
    const Word& r = p.relators[ri];
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
      std::size_t count = 0, pos = 0;
      for (std::size_t k = 0; k < r.size(); ++k)
        if (r[k].gen == g) {
          ++count;
          pos = k;
        }
      if (count != 1) continue;
      bool better = !best || r.size() < p.relators[best->relator].size() ||
                    (r.size() == p.relators[best->relator].size() && g < best->gen);
      if (better) best = Elimination{ri, g, pos};
    }
  }
  return best;
}

bool eliminate_once(GroupPresentation& p) {
  p.relators = reduced_nonempty(p.relators);
  auto pick = pick_elimination(p);
  if (!pick) return false;

  const Word& r = p.relators[pick->relator];
  Word before(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pick->position));
  Word after(r.begin() + static_cast<std::ptrdiff_t>(pick->position) + 1, r.end());
  // r = u x^e v = 1  gives  x = u^-1 v^-1 (e = 1) or x = v u (e = -1).
  Word image = r[pick->position].exp == 1 ? concat(inverse(before), inverse(after))
                                          : concat(after, before);
  image = free_reduce(image);

  std::vector<Word> rest;
  for (std::size_t k = 0; k < p.relators.size(); ++k)
    if (k != pick->relator) rest.push_back(substitute(p.relators[k], pick->gen, image));
  p.relators = reduced_nonempty(rest);
  drop_generator(p, pick->gen);
  return true;
}

// One length-reducing substitution x -> x y^e or x -> y^e x, if any exists.
bool shorten_once(GroupPresentation& p) {
  const std::size_t current = p.total_length();
  std::size_t best_len = current;
  std::vector<Word> best;
  for (std::size_t x = 0; x < p.generators.size(); ++x)
    for (std::size_t y = 0; y < p.generators.size(); ++y) {
      if (x == y) continue;
      for (int e : {1, -1})
        for (bool left : {false, true}) {
          Word image = left ? Word{Letter{y, e}, Letter{x, 1}} : Word{Letter{x, 1}, Letter{y, e}};
          std::vector<Word> next;
          std::size_t len = 0;
          for (const auto& r : p.relators) {
            next.push_back(cyclic_reduce(substitute(r, x, image)));
            len += next.back().size();
          }
          if (len < best_len) {
            best_len = len;
            best = std::move(next);
          }
        }
    }
  if (best_len == current) return false;
  p.relators = reduced_nonempty(best);
  return true;
}

}  // namespace

GroupPresentation eliminate_generators(const GroupPresentation& p) {
  p.check();
  GroupPresentation out = p;
  while (eliminate_once(out)) {
  }
  return out;
}

GroupPresentation tietze_simplify(const GroupPresentation& p) {
  GroupPresentation out = eliminate_generators(p);
  for (;;) {
    bool changed = false;
    while (shorten_once(out)) changed = true;
    while (eliminate_once(out)) changed = true;
    if (!changed) break;
  }
  return out;
}

}  // namespace slcinv
