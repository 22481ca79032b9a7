#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace enchilada {

/// A multiplicity: a natural number or countable infinity (INF).
///
/// INF + x = INF, INF * 0 = 0, INF * x = INF for x >= 1. Finite overflow
/// throws rather than wrapping.
class Cardinal {
public:
  constexpr Cardinal() = default;
  constexpr Cardinal(std::uint64_t n) : value_(n) {}  // NOLINT(implicit)

  static constexpr Cardinal inf() {
    Cardinal c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_inf() const noexcept { return infinite_; }
  constexpr bool is_zero() const noexcept { return !infinite_ && value_ == 0; }
  /// Finite value; throws for INF.
  std::uint64_t value() const;

  Cardinal& operator+=(const Cardinal& rhs);
  Cardinal& operator*=(const Cardinal& rhs);
  friend Cardinal operator+(Cardinal a, const Cardinal& b) { return a += b; }
  friend Cardinal operator*(Cardinal a, const Cardinal& b) { return a *= b; }

  friend constexpr bool operator==(const Cardinal&, const Cardinal&) = default;
  /// INF compares greater than every natural number.
  friend constexpr std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

inline constexpr Cardinal kInf = Cardinal::inf();

std::ostream& operator<<(std::ostream& out, const Cardinal& c);

/// Dense row-major matrix of cardinals. Either dimension may be zero.
class CardinalMatrix {
public:
  CardinalMatrix() = default;
  CardinalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  CardinalMatrix(std::initializer_list<std::initializer_list<Cardinal>> rows);

  static CardinalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Cardinal& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Cardinal& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  bool has_inf() const;
  bool row_is_zero(std::size_t i) const;
  bool col_is_zero(std::size_t j) const;
  Cardinal row_sum(std::size_t i) const;
  Cardinal col_sum(std::size_t j) const;

  CardinalMatrix transpose() const;
  CardinalMatrix select_rows(const std::vector<std::size_t>& rows) const;
  CardinalMatrix select_cols(const std::vector<std::size_t>& cols) const;

  friend CardinalMatrix operator*(const CardinalMatrix& a, const CardinalMatrix& b);
  friend CardinalMatrix operator+(const CardinalMatrix& a, const CardinalMatrix& b);
  friend bool operator==(const CardinalMatrix&, const CardinalMatrix&) = default;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cardinal> data_;
};

std::ostream& operator<<(std::ostream& out, const CardinalMatrix& m);

}  // namespace enchilada
