#include "boolprime/dense.hpp"

#include <bit>
#include <stdexcept>

#include "boolprime/errors.hpp"

namespace boolprime {

Packing::Packing(std::size_t nvars, Exp bound) : nvars_(nvars), bound_(bound), nbits_(1) {
  if (nvars == 0) throw PreconditionError("packing needs at least one variable");
  const std::size_t radix = static_cast<std::size_t>(bound) + 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (nbits_ > (std::size_t{1} << 40) / radix) throw PreconditionError("packing box too large");
    nbits_ *= radix;
  }
}

bool Packing::fits(const Poly& f) const {
  if (f.nvars() != nvars_) return false;
  for (Exp e : f.flat()) {
    if (e > bound_) return false;
  }
  return true;
}

std::size_t Packing::index(std::span<const Exp> exps) const {
  const std::size_t radix = static_cast<std::size_t>(bound_) + 1;
  std::size_t idx = 0;
  // First variable is the most significant digit, so packed order is lex.
  for (Exp e : exps) idx = idx * radix + e;
  return idx;
}

void Packing::unpack_index(std::size_t idx, std::span<Exp> out) const {
  const std::size_t radix = static_cast<std::size_t>(bound_) + 1;
  for (std::size_t i = nvars_; i-- > 0;) {
    out[i] = static_cast<Exp>(idx % radix);
    idx /= radix;
  }
}

bool DenseSet::none() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t DenseSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

DenseSet pack(const Poly& f, const Packing& p) {
  if (!p.fits(f)) throw PreconditionError("polynomial does not fit the packing box");
  DenseSet s(p.nwords());
  for (std::size_t i = 0; i < f.size(); ++i) s.set(p.index(f.term(i)));
  return s;
}

Poly unpack(const DenseSet& s, const Packing& p) {
  std::vector<Exp> flat;
  flat.reserve(s.count() * p.nvars());
  std::vector<Exp> v(p.nvars());
  s.for_each([&](std::size_t bit) {
    p.unpack_index(bit, v);
    flat.insert(flat.end(), v.begin(), v.end());
  });
  return Poly::from_flat(p.nvars(), std::move(flat));
}

std::vector<std::size_t> packed_indices(const Poly& f, const Packing& p) {
  std::vector<std::size_t> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(p.index(f.term(i)));
  return out;
}

DenseSet minkowski(const DenseSet& f, std::span<const std::size_t> g_terms, std::size_t nwords) {
  DenseSet out(nwords);
  for (std::size_t t : g_terms) kernels::or_shl(out.words(), f.words(), t);
  return out;
}

}  // namespace boolprime
