#include "boolprime/kernels.hpp"

#include <algorithm>

namespace boolprime::kernels {
namespace {

void or_shl_scalar(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t ws = shift / kWordBits;
  const unsigned bs = static_cast<unsigned>(shift % kWordBits);
  const std::size_t n = dst.size();
  if (ws >= n) return;
  // dst[i] receives src[i - ws] << bs and src[i - ws - 1] >> (64 - bs).
  const std::size_t end = std::min(n, src.size() + ws + (bs != 0 ? 1 : 0));
  for (std::size_t i = ws; i < end; ++i) {
    const std::size_t j = i - ws;
    Word v = j < src.size() ? (src[j] << bs) : 0;
    if (bs != 0 && j >= 1 && j - 1 < src.size()) v |= src[j - 1] >> (kWordBits - bs);
    dst[i] |= v;
  }
}

void and_shr_scalar(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t ws = shift / kWordBits;
  const unsigned bs = static_cast<unsigned>(shift % kWordBits);
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const std::size_t j = i + ws;
    Word v = j < src.size() ? (src[j] >> bs) : 0;
    if (bs != 0 && j + 1 < src.size()) v |= src[j + 1] << (kWordBits - bs);
    dst[i] &= v;
  }
}

void and_inplace_scalar(std::span<Word> dst, std::span<const Word> src) {
  const std::size_t n = std::min(dst.size(), src.size());
  for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
  for (std::size_t i = n; i < dst.size(); ++i) dst[i] = 0;
}

bool is_subset_scalar(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Word bw = i < b.size() ? b[i] : 0;
    if ((a[i] & ~bw) != 0) return false;
  }
  return true;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", or_shl_scalar, and_shr_scalar, and_inplace_scalar,
                                 is_subset_scalar};
  return table;
}

}  // namespace boolprime::kernels
