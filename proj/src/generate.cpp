#include "enchilada/generate.hpp"

namespace enchilada {

std::vector<FdAlgebra> enumerate_algebras(std::size_t max_blocks, std::size_t max_dim) {
  std::vector<FdAlgebra> out{FdAlgebra{}};
  std::vector<std::vector<std::size_t>> layer{{}};
  for (std::size_t r = 1; r <= max_blocks; ++r) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : layer) {
      for (std::size_t n = 1; n <= max_dim; ++n) {
        auto blocks = prefix;
        blocks.push_back(n);
        out.emplace_back(blocks);
        next.push_back(std::move(blocks));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<CorrClass> enumerate_corrs(const FdAlgebra& a, const FdAlgebra& b,
                                       std::uint64_t max_entry) {
  const std::size_t r = a.block_count();
  const std::size_t s = b.block_count();
  const std::size_t cells = r * s;
  std::vector<std::uint64_t> digits(cells, 0);
  std::vector<CorrClass> out;
  while (true) {
    CardinalMatrix m(r, s);
    for (std::size_t k = 0; k < cells; ++k) m(k / s, k % s) = digits[k];
    out.emplace_back(a, b, std::move(m));
    std::size_t k = cells;
    while (k > 0) {
      --k;
      if (digits[k] < max_entry) {
        ++digits[k];
        break;
      }
      digits[k] = 0;
      if (k == 0) return out;
    }
    if (cells == 0) return out;
  }
}

std::uint64_t InstanceGenerator::below(std::uint64_t n) {
  // Rejection sampling keeps the draw unbiased and implementation-independent.
  const std::uint64_t limit = rng_.max() - rng_.max() % n;
  std::uint64_t v = 0;
  do {
    v = rng_();
  } while (v >= limit);
  return v % n;
}

bool InstanceGenerator::chance(double p) {
  return static_cast<double>(below(1u << 20)) < p * static_cast<double>(1u << 20);
}

FdAlgebra InstanceGenerator::algebra(bool allow_zero) {
  const std::size_t lo = allow_zero ? 0 : 1;
  const std::size_t r = lo + below(bounds_.max_blocks - lo + 1);
  std::vector<std::size_t> blocks;
  for (std::size_t i = 0; i < r; ++i) blocks.push_back(1 + below(bounds_.max_dim));
  return FdAlgebra(std::move(blocks));
}

CorrClass InstanceGenerator::corr(const FdAlgebra& a, const FdAlgebra& b) {
  return corr_with_inf(a, b, 0.0);
}

CorrClass InstanceGenerator::corr_with_inf(const FdAlgebra& a, const FdAlgebra& b,
                                           double inf_probability) {
  CardinalMatrix m(a.block_count(), b.block_count());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m(i, j) = (inf_probability > 0 && chance(inf_probability))
                    ? kInf
                    : Cardinal{below(bounds_.max_entry + 1)};
    }
  }
  return CorrClass(a, b, std::move(m));
}

CorrClass InstanceGenerator::sparse_corr(const FdAlgebra& a, const FdAlgebra& b,
                                         double zero_probability) {
  CardinalMatrix m(a.block_count(), b.block_count());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m(i, j) = chance(zero_probability) ? Cardinal{0} : Cardinal{1 + below(bounds_.max_entry)};
    }
  }
  return CorrClass(a, b, std::move(m));
}

Ideal InstanceGenerator::ideal(const FdAlgebra& a) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    if (below(2) == 1) members.push_back(i);
  }
  return Ideal(a, std::move(members));
}

}  // namespace enchilada
