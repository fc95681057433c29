#include <random>
#include <vector>

#include "boolprime/ideals.hpp"
#include "boolprime/kernels.hpp"
#include "doctest.h"

namespace k = boolprime::kernels;
using k::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<Word> v(n);
  for (auto& w : v) w = rng();
  return v;
}

// Restores the active table on scope exit.
struct Pin {
  std::string prev;
  explicit Pin(std::string_view name) : prev(k::active().name) { REQUIRE(k::select(name)); }
  ~Pin() { k::select(prev); }
};

}  // namespace

TEST_CASE("scalar and AVX2 kernels agree") {
  const k::KernelTable* avx = k::avx2_table();
  if (avx == nullptr || !k::cpu_has_avx2()) {
    MESSAGE("AVX2 unavailable; only the scalar table is exercised");
    return;
  }
  const k::KernelTable& sc = k::scalar_table();
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 17u, 33u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto src = random_words(rng, n + (trial % 3));
      const auto base = random_words(rng, n);
      const std::size_t shift = rng() % (64 * n + 70);

      auto a = base, b = base;
      sc.or_shl(a, src, shift);
      avx->or_shl(b, src, shift);
      CHECK(a == b);

      a = base, b = base;
      sc.and_shr(a, src, shift);
      avx->and_shr(b, src, shift);
      CHECK(a == b);

      a = base, b = base;
      sc.and_inplace(a, src);
      avx->and_inplace(b, src);
      CHECK(a == b);

      auto sub = base;
      for (std::size_t i = 0; i < n; ++i) sub[i] &= (trial % 2 == 0) ? base[i] & src[i % src.size()] : rng();
      CHECK(sc.is_subset(sub, base) == avx->is_subset(sub, base));
      CHECK(sc.is_subset(base, base));
      CHECK(avx->is_subset(base, base));
    }
  }
}

TEST_CASE("scalar kernels match bit-by-bit definitions") {
  const k::KernelTable& sc = k::scalar_table();
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 3u, 6u}) {
    for (int t = 0; t < 30; ++t) {
      const auto src = random_words(rng, n);
      const auto base = random_words(rng, n);
      const std::size_t shift = rng() % (64 * n + 10);
      auto bit = [](const std::vector<Word>& v, std::size_t i) {
        return i < 64 * v.size() && ((v[i / 64] >> (i % 64)) & 1U);
      };
      auto a = base;
      sc.or_shl(a, src, shift);
      auto b = base;
      sc.and_shr(b, src, shift);
      for (std::size_t i = 0; i < 64 * n; ++i) {
        const bool shl = i >= shift && bit(src, i - shift);
        CHECK(bit(a, i) == (bit(base, i) || shl));
        CHECK(bit(b, i) == (bit(base, i) && bit(src, i + shift)));
      }
    }
  }
}

TEST_CASE("membership verdicts do not depend on the kernel table") {
  using namespace boolprime;
  std::vector<std::string> names{"scalar"};
  if (k::avx2_table() != nullptr && k::cpu_has_avx2()) names.push_back("avx2");
  std::vector<std::vector<bool>> runs;
  for (const auto& name : names) {
    Pin pin(name);
    const IdealView view(IdealSpec::family(family::StarD1{PrimeSubset::finite({1}), {}}), 140);
    std::vector<bool> out;
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
      std::vector<Exp> e{0};
      const Exp top = 60 + static_cast<Exp>(rng() % 80);
      for (Exp x = 1; x < top; ++x) {
        if (rng() % 3 == 0) e.push_back(x);
      }
      e.push_back(top - 1);
      e.push_back(top);
      out.push_back(view.contains(Poly::from_exponents(e)));
    }
    runs.push_back(out);
  }
  for (const auto& r : runs) CHECK(r == runs.front());
}
