#include "fink/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define FINK_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#else
#define FINK_HAVE_AVX2_KERNELS 0
#endif

#include <algorithm>

namespace fink::simd {

#if FINK_HAVE_AVX2_KERNELS
namespace {

constexpr std::size_t kLanes = 32;

#define FINK_AVX2 __attribute__((target("avx2")))

FINK_AVX2 void join_avx2(const Coeff* a, const Coeff* b, Coeff* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_max_epu8(va, vb));
  }
  for (; i < n; ++i) out[i] = std::max(a[i], b[i]);
}

FINK_AVX2 void meet_avx2(const Coeff* a, const Coeff* b, Coeff* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_min_epu8(va, vb));
  }
  for (; i < n; ++i) out[i] = std::min(a[i], b[i]);
}

FINK_AVX2 void tetris_avx2(const Coeff* a, Coeff* out, std::size_t n, Coeff by) {
  const __m256i vby = _mm256_set1_epi8(static_cast<char>(by));
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_subs_epu8(va, vby));
  }
  for (; i < n; ++i) out[i] = a[i] > by ? static_cast<Coeff>(a[i] - by) : Coeff{0};
}

FINK_AVX2 Coeff max_value_avx2(const Coeff* a, std::size_t n) {
  std::size_t i = 0;
  Coeff m = 0;
  if (n >= kLanes) {
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes)
      acc = _mm256_max_epu8(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    __m128i x = _mm_max_epu8(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
    x = _mm_max_epu8(x, _mm_srli_si128(x, 8));
    x = _mm_max_epu8(x, _mm_srli_si128(x, 4));
    x = _mm_max_epu8(x, _mm_srli_si128(x, 2));
    x = _mm_max_epu8(x, _mm_srli_si128(x, 1));
    m = static_cast<Coeff>(_mm_cvtsi128_si32(x) & 0xff);
  }
  for (; i < n; ++i) m = std::max(m, a[i]);
  return m;
}

FINK_AVX2 bool agrees_on_support_avx2(const Coeff* s, const Coeff* t, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + i));
    const __m256i vt = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + i));
    const __m256i ok = _mm256_or_si256(_mm256_cmpeq_epi8(vs, zero), _mm256_cmpeq_epi8(vs, vt));
    if (_mm256_movemask_epi8(ok) != -1) return false;
  }
  for (; i < n; ++i)
    if (s[i] != 0 && s[i] != t[i]) return false;
  return true;
}

FINK_AVX2 bool disagrees_on_common_support_avx2(const Coeff* s, const Coeff* t, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + i));
    const __m256i vt = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + i));
    const __m256i clash = _mm256_andnot_si256(_mm256_cmpeq_epi8(vs, zero), _mm256_cmpeq_epi8(vs, vt));
    if (_mm256_movemask_epi8(clash) != 0) return false;
  }
  for (; i < n; ++i)
    if (s[i] != 0 && s[i] == t[i]) return false;
  return true;
}

#undef FINK_AVX2

}  // namespace

const KernelTable* avx2_kernels() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2");
  static const KernelTable table{join_avx2,
                                 meet_avx2,
                                 tetris_avx2,
                                 max_value_avx2,
                                 agrees_on_support_avx2,
                                 disagrees_on_common_support_avx2,
                                 "avx2"};
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_kernels() noexcept { return nullptr; }

#endif

}  // namespace fink::simd
