#include "algdil/kernels.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace algdil::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect_backend()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::reference:
      return "reference";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::reference:
      return true;
    case Backend::avx2:
      return avx2::compiled() && cpu_has_avx2();
  }
  return false;
}

Backend detect_backend() {
  return backend_available(Backend::avx2) ? Backend::avx2 : Backend::reference;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void select_backend(Backend b) {
  if (!backend_available(b)) {
    throw std::invalid_argument("kernel backend not available: " + std::string(backend_name(b)));
  }
  current().store(b, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t p) {
  if (active_backend() == Backend::avx2) {
    avx2::axpy_mod(y, x, a, p);
  } else {
    ref::axpy_mod(y, x, a, p);
  }
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  if (active_backend() == Backend::avx2) {
    avx2::scale_mod(y, a, p);
  } else {
    ref::scale_mod(y, a, p);
  }
}

}  // namespace algdil::kernels
