#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Batched products of pure-odd monomials stored as bitmasks over <= 64
// generators. For blades a, b the product e_a * e_b is
//   0                         if a & b != 0
//   (-1)^inv(a,b) e_{a|b}      otherwise,
// where inv(a,b) counts pairs (i in a, j in b) with i > j.
namespace nary::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

// Straight inversion counting, one bit at a time. The reference every other
// variant is tested against.
void blade_product_reference(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                             std::span<std::uint64_t> mask, std::span<std::int8_t> sign);

// Branch-free prefix-xor formulation; the scalar twin of the SIMD variants.
void blade_product_portable(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                            std::span<std::uint64_t> mask, std::span<std::int8_t> sign);

#if defined(__x86_64__) || defined(_M_X64)
void blade_product_avx2(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                        std::span<std::uint64_t> mask, std::span<std::int8_t> sign);
#endif

#if defined(__aarch64__)
void blade_product_neon(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                        std::span<std::uint64_t> mask, std::span<std::int8_t> sign);
#endif

bool isa_available(Isa isa);

// Best ISA supported by the running CPU, unless overridden by force_isa.
Isa active_isa();

// Pin the dispatcher to one variant (tests, benchmarking). Throws if the ISA
// is not available on this machine.
void force_isa(Isa isa);
void reset_isa();

// Dispatching entry point used by the algebra code.
void blade_product(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                   std::span<std::uint64_t> mask, std::span<std::int8_t> sign);

// Single-pair helpers shared by the variants.
inline std::uint64_t prefix_xor(std::uint64_t x) {
  x ^= x << 1;
  x ^= x << 2;
  x ^= x << 4;
  x ^= x << 8;
  x ^= x << 16;
  x ^= x << 32;
  return x;
}

inline int blade_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  // bit i of below_parity = parity of popcount(b & ((1<<i)-1)).
  const std::uint64_t below_parity = prefix_xor(b << 1);
  return (prefix_xor(a & below_parity) >> 63) ? -1 : 1;
}

}  // namespace nary::kernels
