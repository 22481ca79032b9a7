#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace enchilada {

/// A finite-dimensional C*-algebra M_{n_1} + ... + M_{n_r}, stored as its
/// ordered list of block sizes. The empty list is the zero algebra.
///
/// Block order matters for matrix indexing; isomorphism only sees the
/// multiset of sizes. At finite dimension the multiplier algebra coincides
/// with the algebra itself, so no separate type exists for it.
class FdAlgebra {
public:
  FdAlgebra() = default;
  explicit FdAlgebra(std::vector<std::size_t> blocks);
  FdAlgebra(std::initializer_list<std::size_t> blocks)
      : FdAlgebra(std::vector<std::size_t>(blocks)) {}

  const std::vector<std::size_t>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t block_size(std::size_t i) const { return blocks_.at(i); }
  bool is_zero() const noexcept { return blocks_.empty(); }

  /// Sum of n_i^2.
  std::size_t dimension() const noexcept;

  std::string to_string() const;

  friend bool operator==(const FdAlgebra&, const FdAlgebra&) = default;

private:
  std::vector<std::size_t> blocks_;
};

/// Checked constructor mirroring the JSON surface: rejects non-positive sizes.
FdAlgebra make_algebra(const std::vector<long long>& blocks);

bool algebras_isomorphic(const FdAlgebra& a, const FdAlgebra& b);

/// A closed two-sided ideal, i.e. a subset of block indices (0-based, sorted,
/// unique) of its parent.
class Ideal {
public:
  Ideal() = default;
  Ideal(FdAlgebra parent, std::vector<std::size_t> members);

  static Ideal zero(const FdAlgebra& parent) { return Ideal(parent, {}); }
  static Ideal full(const FdAlgebra& parent);

  const FdAlgebra& parent() const noexcept { return parent_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  bool contains(std::size_t block) const;
  bool empty() const noexcept { return members_.empty(); }
  bool is_full() const noexcept { return members_.size() == parent_.block_count(); }

  /// The ideal viewed as an algebra in its own right.
  FdAlgebra algebra() const;
  /// Blocks of the parent not in the ideal, in order.
  std::vector<std::size_t> complement() const;

  bool subset_of(const Ideal& other) const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

private:
  FdAlgebra parent_;
  std::vector<std::size_t> members_;
};

FdAlgebra quotient(const FdAlgebra& a, const Ideal& ideal);

}  // namespace enchilada
