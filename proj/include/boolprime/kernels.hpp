#pragma once

// Word-level bitset kernels behind exact Boolean polynomial arithmetic.
//
// A support set is packed into a little-endian array of 64-bit words, bit i of
// the array standing for exponent index i. Minkowski sums and shifted-cover
// membership reduce to two primitives: OR-ing a left-shifted copy into a
// destination, and AND-ing a right-shifted copy into a destination. Both have
// a scalar reference implementation and an AVX2 variant; the active table is
// chosen once at runtime from CPUID and can be pinned with BOOLPRIME_KERNEL.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace boolprime::kernels {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for_bits(std::size_t nbits) {
  return (nbits + kWordBits - 1) / kWordBits;
}

/// Function table for one instruction-set level.
struct KernelTable {
  std::string_view name;
  // dst |= (src << shift), bits shifted past the end of dst are dropped.
  void (*or_shl)(std::span<Word> dst, std::span<const Word> src, std::size_t shift);
  // dst &= (src >> shift), with src treated as zero beyond its end.
  void (*and_shr)(std::span<Word> dst, std::span<const Word> src, std::size_t shift);
  // dst &= src, elementwise over the common length; the tail of dst is cleared.
  void (*and_inplace)(std::span<Word> dst, std::span<const Word> src);
  // true iff (a & ~b) has no set bit, i.e. a is a subset of b.
  bool (*is_subset)(std::span<const Word> a, std::span<const Word> b);
};

const KernelTable& scalar_table();
/// nullptr when the binary was built without AVX2 support.
const KernelTable* avx2_table();

/// The table selected for this process. Selection happens on first call:
/// BOOLPRIME_KERNEL=scalar|avx2 overrides detection.
const KernelTable& active();

/// Force a specific table; used by equivalence tests and benchmarks.
/// Returns false if the requested level is unavailable on this CPU.
bool select(std::string_view name);

bool cpu_has_avx2();

inline void or_shl(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  active().or_shl(dst, src, shift);
}
inline void and_shr(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  active().and_shr(dst, src, shift);
}
inline void and_inplace(std::span<Word> dst, std::span<const Word> src) {
  active().and_inplace(dst, src);
}
inline bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  return active().is_subset(a, b);
}

}  // namespace boolprime::kernels
