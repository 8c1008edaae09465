#pragma once

// Row kernels for GF(p) matrices with p < 2^31.
//
// Every elimination and product over a prime field funnels through these two
// loops. A portable reference version is always built; an AVX2 version is
// compiled separately and selected at runtime when the CPU reports support.
// Both must produce bit-identical residues.

#include <cstdint>
#include <span>
#include <string_view>

namespace algdil::kernels {

enum class Backend { reference, avx2 };

std::string_view backend_name(Backend b);

/// y[i] <- (y[i] + a * x[i]) mod p. Inputs must already be reduced.
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
              std::uint32_t a, std::uint32_t p);

/// y[i] <- (a * y[i]) mod p.
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);

bool backend_available(Backend b);
Backend active_backend();
/// Throws std::invalid_argument if the backend is not available on this CPU.
void select_backend(Backend b);
/// Best backend the CPU supports.
Backend detect_backend();

namespace ref {
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
              std::uint32_t a, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);
}  // namespace ref

// Only callable when backend_available(Backend::avx2).
namespace avx2 {
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
              std::uint32_t a, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);
bool compiled();
}  // namespace avx2

}  // namespace algdil::kernels
