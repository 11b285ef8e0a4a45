#include "nary/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace nary::kernels {

namespace {

inline uint64x2_t prefix_xor2(uint64x2_t x) {
  x = veorq_u64(x, vshlq_n_u64(x, 1));
  x = veorq_u64(x, vshlq_n_u64(x, 2));
  x = veorq_u64(x, vshlq_n_u64(x, 4));
  x = veorq_u64(x, vshlq_n_u64(x, 8));
  x = veorq_u64(x, vshlq_n_u64(x, 16));
  x = veorq_u64(x, vshlq_n_u64(x, 32));
  return x;
}

}  // namespace

void blade_product_neon(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                        std::span<std::uint64_t> mask, std::span<std::int8_t> sign) {
  const std::size_t n = a.size();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const uint64x2_t va = vld1q_u64(a.data() + k);
    const uint64x2_t vb = vld1q_u64(b.data() + k);
    vst1q_u64(mask.data() + k, vorrq_u64(va, vb));
    const uint64x2_t parity = prefix_xor2(vandq_u64(va, prefix_xor2(vshlq_n_u64(vb, 1))));
    const uint64x2_t overlap = vandq_u64(va, vb);
    const std::uint64_t par[2] = {vgetq_lane_u64(parity, 0), vgetq_lane_u64(parity, 1)};
    const std::uint64_t ov[2] = {vgetq_lane_u64(overlap, 0), vgetq_lane_u64(overlap, 1)};
    for (int lane = 0; lane < 2; ++lane) {
      sign[k + lane] = static_cast<std::int8_t>(ov[lane] ? 0 : ((par[lane] >> 63) ? -1 : 1));
    }
  }
  for (; k < n; ++k) {
    mask[k] = a[k] | b[k];
    sign[k] = static_cast<std::int8_t>(blade_sign(a[k], b[k]));
  }
}

}  // namespace nary::kernels

#endif
