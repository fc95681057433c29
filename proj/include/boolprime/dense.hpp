#pragma once

// Packed bitset view of supports, used by the arithmetic and membership
// kernels. Exponent vectors with every coordinate <= bound are packed in
// mixed radix (bound + 1); as long as the sum of two vectors stays inside the
// box, shifting a bitset by the packed index of a vector is the same as
// translating the support by that vector.

#include <cstddef>
#include <span>
#include <vector>

#include "boolprime/kernels.hpp"
#include "boolprime/poly.hpp"

namespace boolprime {

class Packing {
 public:
  Packing(std::size_t nvars, Exp bound);

  std::size_t nvars() const noexcept { return nvars_; }
  Exp bound() const noexcept { return bound_; }
  std::size_t nbits() const noexcept { return nbits_; }
  std::size_t nwords() const noexcept { return kernels::words_for_bits(nbits_); }

  /// Whether every coordinate of every term is <= bound.
  bool fits(const Poly& f) const;
  std::size_t index(std::span<const Exp> exps) const;
  void unpack_index(std::size_t idx, std::span<Exp> out) const;

 private:
  std::size_t nvars_;
  Exp bound_;
  std::size_t nbits_;
};

class DenseSet {
 public:
  DenseSet() = default;
  explicit DenseSet(std::size_t nwords) : words_(nwords, 0) {}

  std::span<kernels::Word> words() noexcept { return words_; }
  std::span<const kernels::Word> words() const noexcept { return words_; }
  std::size_t nwords() const noexcept { return words_.size(); }

  void set(std::size_t bit) { words_[bit / kernels::kWordBits] |= kernels::Word{1} << (bit % kernels::kWordBits); }
  bool test(std::size_t bit) const {
    const std::size_t w = bit / kernels::kWordBits;
    return w < words_.size() && ((words_[w] >> (bit % kernels::kWordBits)) & 1U) != 0;
  }
  bool none() const;
  std::size_t count() const;
  /// Calls fn(bit) for every set bit in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      kernels::Word v = words_[w];
      while (v != 0) {
        const int b = __builtin_ctzll(v);
        fn(w * kernels::kWordBits + static_cast<std::size_t>(b));
        v &= v - 1;
      }
    }
  }

  friend bool operator==(const DenseSet&, const DenseSet&) = default;

 private:
  std::vector<kernels::Word> words_;
};

DenseSet pack(const Poly& f, const Packing& p);
Poly unpack(const DenseSet& s, const Packing& p);

/// Packed indices of the terms of f.
std::vector<std::size_t> packed_indices(const Poly& f, const Packing& p);

/// Minkowski sum f + g where g is given by the packed indices of its terms.
/// The caller guarantees the result stays inside the packing box.
DenseSet minkowski(const DenseSet& f, std::span<const std::size_t> g_terms, std::size_t nwords);

}  // namespace boolprime
