#include "fink/simd/kernels.hpp"

#include <algorithm>

namespace fink::simd {
namespace {

void join_scalar(const Coeff* a, const Coeff* b, Coeff* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::max(a[i], b[i]);
}

void meet_scalar(const Coeff* a, const Coeff* b, Coeff* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::min(a[i], b[i]);
}

void tetris_scalar(const Coeff* a, Coeff* out, std::size_t n, Coeff by) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] > by ? static_cast<Coeff>(a[i] - by) : Coeff{0};
}

Coeff max_value_scalar(const Coeff* a, std::size_t n) {
  Coeff m = 0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, a[i]);
  return m;
}

bool agrees_on_support_scalar(const Coeff* s, const Coeff* t, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (s[i] != 0 && s[i] != t[i]) return false;
  return true;
}

bool disagrees_on_common_support_scalar(const Coeff* s, const Coeff* t, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (s[i] != 0 && s[i] == t[i]) return false;
  return true;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{join_scalar,
                                 meet_scalar,
                                 tetris_scalar,
                                 max_value_scalar,
                                 agrees_on_support_scalar,
                                 disagrees_on_common_support_scalar,
                                 "scalar"};
  return table;
}

}  // namespace fink::simd
