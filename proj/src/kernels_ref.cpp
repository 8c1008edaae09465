#include "algdil/kernels.hpp"

#include <cassert>

namespace algdil::kernels::ref {

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
              std::uint32_t a, std::uint32_t p) {
  assert(y.size() == x.size());
  if (a == 0) return;
  const std::uint64_t pp = p;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = static_cast<std::uint32_t>((y[i] + std::uint64_t{a} * x[i]) % pp);
  }
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  const std::uint64_t pp = p;
  for (auto& v : y) v = static_cast<std::uint32_t>((std::uint64_t{a} * v) % pp);
}

}  // namespace algdil::kernels::ref
