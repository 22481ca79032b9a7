#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "enchilada/algebra.hpp"
#include "enchilada/corr.hpp"

namespace enchilada {

/// Size limits for random and exhaustive instance generation.
struct Bounds {
  std::size_t max_blocks = 3;
  std::size_t max_dim = 3;
  std::uint64_t max_entry = 2;
};

/// Every algebra with at most `max_blocks` blocks of size at most `max_dim`,
/// block order included, starting with the zero algebra.
std::vector<FdAlgebra> enumerate_algebras(std::size_t max_blocks, std::size_t max_dim);

/// Every matrix shape-compatible with a -> b with entries in [0, max_entry],
/// in lexicographic order.
std::vector<CorrClass> enumerate_corrs(const FdAlgebra& a, const FdAlgebra& b,
                                       std::uint64_t max_entry);

/// Seeded source of random instances. Uses its own bounded draws on top of
/// mt19937_64 so that a seed gives the same stream on every platform.
class InstanceGenerator {
public:
  InstanceGenerator(std::uint64_t seed, Bounds bounds) : rng_(seed), bounds_(bounds) {}

  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
  bool chance(double p);

  /// 1..max_blocks blocks (or 0..max_blocks with allow_zero).
  FdAlgebra algebra(bool allow_zero = false);
  CorrClass corr(const FdAlgebra& a, const FdAlgebra& b);
  /// Like corr(), but each entry is INF with probability `inf_probability`.
  CorrClass corr_with_inf(const FdAlgebra& a, const FdAlgebra& b, double inf_probability);
  /// Each entry zero with probability `zero_probability`, else 1..max_entry.
  CorrClass sparse_corr(const FdAlgebra& a, const FdAlgebra& b, double zero_probability);
  Ideal ideal(const FdAlgebra& a);

  const Bounds& bounds() const noexcept { return bounds_; }

private:
  std::mt19937_64 rng_;
  Bounds bounds_;
};

}  // namespace enchilada
