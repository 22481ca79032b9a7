#include "exact_rank.hpp"

#include <algorithm>

namespace enchilada::detail {

RowEchelon reduce(std::vector<std::vector<Rational>> m, std::size_t cols) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational lead = m[row][col];
    for (auto& v : m[row]) v /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::vector<Integer> right_null_vector(const std::vector<std::vector<std::uint64_t>>& m,
                                       std::size_t cols) {
  std::vector<std::vector<Rational>> q(m.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) q[i][j] = Rational(m[i][j]);
  }
  const RowEchelon e = reduce(std::move(q), cols);
  if (e.rank == cols) return {};

  std::size_t free_col = 0;
  for (std::size_t p = 0; free_col < cols; ++free_col) {
    if (p < e.pivot_cols.size() && e.pivot_cols[p] == free_col) {
      ++p;
      continue;
    }
    break;
  }
  std::vector<Rational> v(cols);
  v[free_col] = 1;
  for (std::size_t r = 0; r < e.rank; ++r) v[e.pivot_cols[r]] = -e.rows[r][free_col];

  Integer denom_lcm = 1;
  for (const auto& x : v) {
    const Integer d = boost::multiprecision::denominator(x);
    denom_lcm = denom_lcm / boost::multiprecision::gcd(denom_lcm, d) * d;
  }
  std::vector<Integer> out(cols);
  Integer g = 0;
  for (std::size_t k = 0; k < cols; ++k) {
    out[k] = boost::multiprecision::numerator(v[k]) * (denom_lcm / boost::multiprecision::denominator(v[k]));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(out[k]));
  }
  const auto first = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

}  // namespace enchilada::detail
