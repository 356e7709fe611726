#include "slcinv/abelian_group.hpp"

#include <algorithm>
#include <map>

#include "slcinv/error.hpp"

namespace slcinv {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::NonInvolutive: return "NonInvolutive";
    case Errc::FixedMarkedPoint: return "FixedMarkedPoint";
    case Errc::ComponentMismatch: return "ComponentMismatch";
    case Errc::DanglingPoint: return "DanglingPoint";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UnknownComponent: return "UnknownComponent";
    case Errc::FixedComponent: return "FixedComponent";
    case Errc::MissingField: return "MissingField";
    case Errc::UnknownGroup: return "UnknownGroup";
    case Errc::NotInD4: return "NotInD4";
    case Errc::GenusNotZero: return "GenusNotZero";
    case Errc::DbarDisconnected: return "DbarDisconnected";
    case Errc::NotSimplyConnected: return "NotSimplyConnected";
    case Errc::UnsupportedNormalHomology: return "UnsupportedNormalHomology";
    case Errc::NormalizationIrregular: return "NormalizationIrregular";
    case Errc::XDisconnected: return "XDisconnected";
    case Errc::GeometricGenusNonzero: return "GeometricGenusNonzero";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NegativeResult: return "NegativeResult";
    case Errc::LabelAmbiguous: return "LabelAmbiguous";
    case Errc::UnpairedPoint: return "UnpairedPoint";
  }
  return "Unknown";
}

namespace {

// Decompose each order into prime powers, then regroup the largest powers of
// every prime into the last invariant factor, the next largest into the one
// before, and so on.
std::vector<BigInt> invariant_factors(const std::vector<BigInt>& orders) {
  std::map<BigInt, std::vector<BigInt>> powers;  // prime -> prime powers
  for (BigInt n : orders) {
    if (n < 0) n = -n;
    for (BigInt p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      BigInt pk = 1;
      while (n % p == 0) {
        n /= p;
        pk *= p;
      }
      powers[p].push_back(pk);
    }
    if (n > 1) powers[n].push_back(n);
  }
  std::size_t len = 0;
  for (auto& [p, list] : powers) {
    std::sort(list.begin(), list.end());
    len = std::max(len, list.size());
  }
  std::vector<BigInt> out(len, BigInt(1));
  for (const auto& [p, list] : powers) {
    std::size_t offset = len - list.size();
    for (std::size_t i = 0; i < list.size(); ++i) out[offset + i] *= list[i];
  }
  return out;
}

}  // namespace

AbelianGroup AbelianGroup::from_cyclic_orders(
    std::size_t free_rank, const std::vector<BigInt>& orders) {
  AbelianGroup g;
  g.free_rank = free_rank;
  std::vector<BigInt> finite;
  for (const auto& d : orders) {
    if (d == 0) {
      ++g.free_rank;
    } else if (d != 1 && d != -1) {
      finite.push_back(d);
    }
  }
  g.torsion = invariant_factors(finite);
  return g;
}

std::string AbelianGroup::to_string() const {
  std::string s;
  auto add = [&s](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (free_rank == 1) add("Z");
  if (free_rank > 1) add("Z^" + std::to_string(free_rank));
  for (const auto& d : torsion) add("Z/" + d.str());
  return s.empty() ? "0" : s;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<BigInt> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return AbelianGroup::from_cyclic_orders(a.free_rank + b.free_rank, orders);
}

}  // namespace slcinv
