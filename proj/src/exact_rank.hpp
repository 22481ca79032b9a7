#pragma once

// Exact linear algebra over Q for small nonnegative integer matrices.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace enchilada::detail {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct RowEchelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<Rational>> rows;  // reduced row echelon form
};

RowEchelon reduce(std::vector<std::vector<Rational>> m, std::size_t cols);

/// A nonzero integer vector v with m * v = 0, or empty when the columns are
/// independent. The first nonzero entry of v is positive.
std::vector<Integer> right_null_vector(const std::vector<std::vector<std::uint64_t>>& m,
                                       std::size_t cols);

}  // namespace enchilada::detail
