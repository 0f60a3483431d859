#pragma once
// Pointwise kernels over coefficient arrays.
//
// Every kernel has a scalar reference implementation. An AVX2 variant is
// compiled in on x86-64 and picked at runtime when the CPU supports it. Both
// variants must agree bit for bit; tests/kernels_test.cpp checks that.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace fink::simd {

using Coeff = std::uint8_t;

struct KernelTable {
  // out[i] = max(a[i], b[i])
  void (*join)(const Coeff* a, const Coeff* b, Coeff* out, std::size_t n);
  // out[i] = min(a[i], b[i])
  void (*meet)(const Coeff* a, const Coeff* b, Coeff* out, std::size_t n);
  // out[i] = max(a[i] - by, 0)
  void (*tetris)(const Coeff* a, Coeff* out, std::size_t n, Coeff by);
  // max over a[0..n), 0 when n == 0
  Coeff (*max_value)(const Coeff* a, std::size_t n);
  // true iff for all i: s[i] == 0 or s[i] == t[i]
  bool (*agrees_on_support)(const Coeff* s, const Coeff* t, std::size_t n);
  // true iff no i with s[i] == t[i] != 0
  bool (*disagrees_on_common_support)(const Coeff* s, const Coeff* t, std::size_t n);
  std::string_view name;
};

enum class Isa { scalar, avx2 };

const KernelTable& scalar_kernels() noexcept;

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

bool isa_available(Isa isa) noexcept;

/// Kernel table used by the library. Defaults to the best available ISA.
const KernelTable& active_kernels() noexcept;
Isa active_isa() noexcept;

/// Override the runtime choice. Returns false (and changes nothing) when the
/// ISA is unavailable. FINK_FORCE_SCALAR=1 in the environment has the same
/// effect as force_isa(Isa::scalar) at startup.
bool force_isa(Isa isa) noexcept;

}  // namespace fink::simd
