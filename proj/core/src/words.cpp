#include "slcinv/words.hpp"

#include <cctype>
#include <charconv>

#include "slcinv/error.hpp"

namespace slcinv {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo].gen == r[hi - 1].gen && r[lo].exp == -r[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo),
              r.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::vector<long long> exponent_sums(const Word& w, std::size_t generator_count) {
  std::vector<long long> sums(generator_count, 0);
  for (const Letter& l : w) sums.at(l.gen) += l.exp;
  return sums;
}

std::size_t GroupPresentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

void GroupPresentation::check() const {
  for (const auto& r : relators)
    for (const Letter& l : r) {
      if (l.gen >= generators.size())
        throw Error(Errc::SchemaError, "relator letter refers to generator " +
                                           std::to_string(l.gen) + " of " +
                                           std::to_string(generators.size()));
      if (l.exp != 1 && l.exp != -1)
        throw Error(Errc::SchemaError, "letter exponent must be +1 or -1");
    }
}

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  Word w;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (text.substr(i) == "1") return w;
  while (i < text.size()) {
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '^')
      ++i;
    std::string name(text.substr(start, i - start));
    long long power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t pstart = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      auto digits = text.substr(pstart, i - pstart);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        throw Error(Errc::ParseError, "bad exponent '" + std::string(digits) + "' in word '" +
                                          std::string(text) + "'");
    }
    std::size_t gen = generators.size();
    for (std::size_t k = 0; k < generators.size(); ++k)
      if (generators[k] == name) gen = k;
    if (gen == generators.size())
      throw Error(Errc::ParseError, "unknown generator '" + name + "' in word '" +
                                        std::string(text) + "'");
    int sign = power < 0 ? -1 : 1;
    for (long long k = 0; k < power * sign; ++k) w.push_back(Letter{gen, sign});
    skip_space();
  }
  return w;
}

std::string format_word(const Word& w, const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long power = static_cast<long long>(j - i) * w[i].exp;
    if (!out.empty()) out += ' ';
    out += generators.at(w[i].gen);
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

IntegerMatrix exponent_matrix(const GroupPresentation& p) {
  IntegerMatrix m(p.generators.size(), p.relators.size());
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (const Letter& l : p.relators[j]) m(l.gen, j) += l.exp;
  return m;
}

AbelianGroup abelianization(const GroupPresentation& p) {
  p.check();
  return cokernel_invariants(exponent_matrix(p));
}

}  // namespace slcinv
