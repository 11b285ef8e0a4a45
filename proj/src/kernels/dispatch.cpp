#include <atomic>

#include "nary/error.hpp"
#include "nary/kernels.hpp"

namespace nary::kernels {

namespace {

Isa detect() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
#if defined(__aarch64__)
  return Isa::Neon;
#endif
  return Isa::Scalar;
}

std::atomic<int> forced{-1};

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa detected = detect();
  const int f = forced.load(std::memory_order_relaxed);
  return f < 0 ? detected : static_cast<Isa>(f);
}

void force_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw Error(ErrorKind::InvalidArgument, "ISA " + std::string(to_string(isa)) + " not available");
  }
  forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { forced.store(-1, std::memory_order_relaxed); }

void blade_product(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                   std::span<std::uint64_t> mask, std::span<std::int8_t> sign) {
  if (b.size() != a.size() || mask.size() < a.size() || sign.size() < a.size()) {
    throw Error(ErrorKind::InvalidArgument, "blade_product: buffer size mismatch");
  }
  switch (active_isa()) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2: blade_product_avx2(a, b, mask, sign); return;
#endif
#if defined(__aarch64__)
    case Isa::Neon: blade_product_neon(a, b, mask, sign); return;
#endif
    default: blade_product_portable(a, b, mask, sign); return;
  }
}

}  // namespace nary::kernels
