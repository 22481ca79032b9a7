#pragma once

#include <functional>

#include "enchilada/corr.hpp"
#include "enchilada/generate.hpp"

namespace enchilada::test {

// Algebra with n copies of C.
inline FdAlgebra scalars(std::size_t n) { return FdAlgebra(std::vector<std::size_t>(n, 1)); }

// Correspondence between commutative algebras, shaped by the matrix.
inline CorrClass scalar_corr(const CardinalMatrix& m) {
  return CorrClass(scalars(m.rows()), scalars(m.cols()), m);
}

// Every correspondence between algebras with at most `blocks` blocks of size at most `dim`.
inline void for_each_corr(std::size_t blocks, std::size_t dim, std::uint64_t max_entry,
                          const std::function<void(const CorrClass&)>& f) {
  const auto algebras = enumerate_algebras(blocks, dim);
  for (const auto& a : algebras) {
    for (const auto& b : algebras) {
      for (const auto& x : enumerate_corrs(a, b, max_entry)) f(x);
    }
  }
}

// Bounded search for M with compose(x, M) = identity.
inline std::optional<CorrClass> search_right_inverse(const CorrClass& x, std::uint64_t max_entry) {
  const CorrClass id = identity_corr(x.source());
  for (const auto& m : enumerate_corrs(x.target(), x.source(), max_entry)) {
    if (compose(x, m) == id) return m;
  }
  return std::nullopt;
}

}  // namespace enchilada::test
