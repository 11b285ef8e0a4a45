#include "nary/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace nary::kernels {

namespace {

__attribute__((target("avx2"))) inline __m256i prefix_xor4(__m256i x) {
  x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 1));
  x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 2));
  x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 4));
  x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 8));
  x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 16));
  x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 32));
  return x;
}

}  // namespace

__attribute__((target("avx2"))) void blade_product_avx2(std::span<const std::uint64_t> a,
                                                         std::span<const std::uint64_t> b,
                                                         std::span<std::uint64_t> mask,
                                                         std::span<std::int8_t> sign) {
  const std::size_t n = a.size();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + k));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + k));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(mask.data() + k), _mm256_or_si256(va, vb));

    const __m256i below = prefix_xor4(_mm256_slli_epi64(vb, 1));
    const __m256i parity = prefix_xor4(_mm256_and_si256(va, below));
    const int odd_bits = _mm256_movemask_pd(_mm256_castsi256_pd(parity));
    const int disjoint_bits =
        _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(va, vb), zero)));
    for (int lane = 0; lane < 4; ++lane) {
      const bool disjoint = (disjoint_bits >> lane) & 1;
      const bool odd = (odd_bits >> lane) & 1;
      sign[k + lane] = static_cast<std::int8_t>(disjoint ? (odd ? -1 : 1) : 0);
    }
  }
  for (; k < n; ++k) {
    mask[k] = a[k] | b[k];
    sign[k] = static_cast<std::int8_t>(blade_sign(a[k], b[k]));
  }
}

}  // namespace nary::kernels

#endif
