#include "algdil/pairs.hpp"

#include <array>

namespace algdil {

namespace {

constexpr std::array<std::pair<PairKind, std::string_view>, 5> kKindNames{{
    {PairKind::polynomial, "polynomial"},
    {PairKind::upper_triangular, "upper-triangular"},
    {PairKind::diagonal, "diagonal"},
    {PairKind::idempotent, "idempotent"},
    {PairKind::explicit_pair, "explicit"},
}};

}  // namespace

std::string_view pair_kind_name(PairKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "unknown";
}

PairKind parse_pair_kind(std::string_view name) {
  for (const auto& [kind, n] : kKindNames) {
    if (n == name) return kind;
  }
  throw InvalidRecipe("unknown pair kind: " + std::string(name));
}

void PairRecipe::validate() const {
  if (kind == PairKind::explicit_pair) {
    throw InvalidRecipe("explicit pairs carry their own matrices and cannot be generated");
  }
  if (height == 0) throw InvalidRecipe("coefficient height must be positive");
  if (dim > 64) throw InvalidRecipe("dimension above 64 is not supported");
}

}  // namespace algdil
