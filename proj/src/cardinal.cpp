#include "enchilada/cardinal.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "enchilada/error.hpp"

namespace enchilada {

std::uint64_t Cardinal::value() const {
  if (infinite_) throw ValidationError("INF has no finite value");
  return value_;
}

Cardinal& Cardinal::operator+=(const Cardinal& rhs) {
  if (infinite_ || rhs.infinite_) {
    *this = inf();
    return *this;
  }
  if (value_ > std::numeric_limits<std::uint64_t>::max() - rhs.value_) {
    throw std::overflow_error("cardinal addition overflow");
  }
  value_ += rhs.value_;
  return *this;
}

Cardinal& Cardinal::operator*=(const Cardinal& rhs) {
  // INF * 0 = 0 on either side.
  if (is_zero() || rhs.is_zero()) {
    *this = Cardinal{0};
    return *this;
  }
  if (infinite_ || rhs.infinite_) {
    *this = inf();
    return *this;
  }
  if (value_ > std::numeric_limits<std::uint64_t>::max() / rhs.value_) {
    throw std::overflow_error("cardinal multiplication overflow");
  }
  value_ *= rhs.value_;
  return *this;
}

std::string Cardinal::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& out, const Cardinal& c) { return out << c.to_string(); }

CardinalMatrix::CardinalMatrix(std::initializer_list<std::initializer_list<Cardinal>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ValidationError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CardinalMatrix CardinalMatrix::identity(std::size_t n) {
  CardinalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool CardinalMatrix::is_zero() const {
  for (const auto& c : data_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CardinalMatrix::has_inf() const {
  for (const auto& c : data_) {
    if (c.is_inf()) return true;
  }
  return false;
}

bool CardinalMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

bool CardinalMatrix::col_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

Cardinal CardinalMatrix::row_sum(std::size_t i) const {
  Cardinal s;
  for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
  return s;
}

Cardinal CardinalMatrix::col_sum(std::size_t j) const {
  Cardinal s;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
  return s;
}

CardinalMatrix CardinalMatrix::transpose() const {
  CardinalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

CardinalMatrix CardinalMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  CardinalMatrix out(rows.size(), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < cols_; ++j) out(r, j) = (*this)(rows[r], j);
  }
  return out;
}

CardinalMatrix CardinalMatrix::select_cols(const std::vector<std::size_t>& cols) const {
  CardinalMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(i, c) = (*this)(i, cols[c]);
  }
  return out;
}

CardinalMatrix operator*(const CardinalMatrix& a, const CardinalMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw EndpointMismatch("matrix product of " + std::to_string(a.rows_) + "x" +
                           std::to_string(a.cols_) + " and " + std::to_string(b.rows_) +
                           "x" + std::to_string(b.cols_));
  }
  CardinalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cardinal& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CardinalMatrix operator+(const CardinalMatrix& a, const CardinalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw EndpointMismatch("entrywise sum of differently shaped matrices");
  }
  CardinalMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

std::string CardinalMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << (*this)(i, j);
    out << "]";
  }
  out << "]";
  if (rows_ == 0 || cols_ == 0) out << "(" << rows_ << "x" << cols_ << ")";
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const CardinalMatrix& m) {
  return out << m.to_string();
}

}  // namespace enchilada
