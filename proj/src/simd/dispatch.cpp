#include <atomic>
#include <cstdlib>
#include <cstring>

#include "fink/simd/kernels.hpp"

namespace fink::simd {
namespace {

const KernelTable* initial_table() noexcept {
  const char* force = std::getenv("FINK_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "0") != 0 && force[0] != '\0') return &scalar_kernels();
  if (const KernelTable* t = avx2_kernels()) return t;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& active_slot() noexcept {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

}  // namespace

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return avx2_kernels() != nullptr;
  }
  return false;
}

const KernelTable& active_kernels() noexcept { return *active_slot().load(std::memory_order_relaxed); }

Isa active_isa() noexcept { return &active_kernels() == &scalar_kernels() ? Isa::scalar : Isa::avx2; }

bool force_isa(Isa isa) noexcept {
  if (!isa_available(isa)) return false;
  active_slot().store(isa == Isa::scalar ? &scalar_kernels() : avx2_kernels(), std::memory_order_relaxed);
  return true;
}

}  // namespace fink::simd
