#include "nary/kernels.hpp"

namespace nary::kernels {

void blade_product_reference(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                             std::span<std::uint64_t> mask, std::span<std::int8_t> sign) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    mask[k] = a[k] | b[k];
    if (a[k] & b[k]) {
      sign[k] = 0;
      continue;
    }
    unsigned inversions = 0;
    for (unsigned i = 0; i < 64; ++i) {
      if (!((a[k] >> i) & 1U)) continue;
      for (unsigned j = 0; j < i; ++j) inversions += (b[k] >> j) & 1U;
    }
    sign[k] = (inversions & 1U) ? -1 : 1;
  }
}

void blade_product_portable(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                            std::span<std::uint64_t> mask, std::span<std::int8_t> sign) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    mask[k] = a[k] | b[k];
    sign[k] = static_cast<std::int8_t>(blade_sign(a[k], b[k]));
  }
}

}  // namespace nary::kernels
