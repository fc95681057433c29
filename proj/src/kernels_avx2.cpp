// Compiled with -mavx2; only reached when CPUID reports AVX2.
#include "boolprime/kernels.hpp"

#include <algorithm>

#if defined(BOOLPRIME_HAVE_AVX2)
#include <immintrin.h>

namespace boolprime::kernels {
namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void or_shl_avx2(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t ws = shift / kWordBits;
  const unsigned bs = static_cast<unsigned>(shift % kWordBits);
  const std::size_t n = dst.size();
  if (ws >= n) return;
  const std::size_t end = std::min(n, src.size() + ws + (bs != 0 ? 1 : 0));
  // Shift counts of 64 produce zero lanes, so bs == 0 needs no special case.
  const __m128i lo = _mm_cvtsi32_si128(static_cast<int>(bs));
  const __m128i hi = _mm_cvtsi32_si128(static_cast<int>(kWordBits - bs));

  std::size_t i = ws;
  auto scalar_step = [&](std::size_t k) {
    const std::size_t j = k - ws;
    Word v = j < src.size() ? (src[j] << bs) : 0;
    if (bs != 0 && j >= 1 && j - 1 < src.size()) v |= src[j - 1] >> (kWordBits - bs);
    dst[k] |= v;
  };
  // First word has no lower neighbour in src.
  if (i < end) scalar_step(i++);
  for (; i + 4 <= end && (i - ws) + 4 <= src.size(); i += 4) {
    const std::size_t j = i - ws;
    const __m256i cur = load(src.data() + j);
    const __m256i prev = load(src.data() + j - 1);
    const __m256i v = _mm256_or_si256(_mm256_sll_epi64(cur, lo), _mm256_srl_epi64(prev, hi));
    store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), v));
  }
  for (; i < end; ++i) scalar_step(i);
}

void and_shr_avx2(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t ws = shift / kWordBits;
  const unsigned bs = static_cast<unsigned>(shift % kWordBits);
  const __m128i lo = _mm_cvtsi32_si128(static_cast<int>(bs));
  const __m128i hi = _mm_cvtsi32_si128(static_cast<int>(kWordBits - bs));
  std::size_t i = 0;
  for (; i + 4 <= dst.size() && i + ws + 5 <= src.size(); i += 4) {
    const std::size_t j = i + ws;
    const __m256i cur = load(src.data() + j);
    const __m256i next = load(src.data() + j + 1);
    const __m256i v = _mm256_or_si256(_mm256_srl_epi64(cur, lo), _mm256_sll_epi64(next, hi));
    store(dst.data() + i, _mm256_and_si256(load(dst.data() + i), v));
  }
  for (; i < dst.size(); ++i) {
    const std::size_t j = i + ws;
    Word v = j < src.size() ? (src[j] >> bs) : 0;
    if (bs != 0 && j + 1 < src.size()) v |= src[j + 1] << (kWordBits - bs);
    dst[i] &= v;
  }
}

void and_inplace_avx2(std::span<Word> dst, std::span<const Word> src) {
  const std::size_t n = std::min(dst.size(), src.size());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    store(dst.data() + i, _mm256_and_si256(load(dst.data() + i), load(src.data() + i)));
  }
  for (; i < n; ++i) dst[i] &= src[i];
  for (i = n; i < dst.size(); ++i) dst[i] = 0;
}

bool is_subset_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // andnot computes ~b & a
    const __m256i diff = _mm256_andnot_si256(load(b.data() + i), load(a.data() + i));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  for (; i < a.size(); ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{"avx2", or_shl_avx2, and_shr_avx2, and_inplace_avx2, is_subset_avx2};
  return &table;
}

}  // namespace boolprime::kernels

#else

namespace boolprime::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace boolprime::kernels

#endif
