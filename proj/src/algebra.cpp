#include "enchilada/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "enchilada/error.hpp"

namespace enchilada {

FdAlgebra::FdAlgebra(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {
  for (std::size_t n : blocks_) {
    if (n == 0) throw ValidationError("block sizes must be positive");
  }
}

std::size_t FdAlgebra::dimension() const noexcept {
  return std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0},
                         [](std::size_t acc, std::size_t n) { return acc + n * n; });
}

std::string FdAlgebra::to_string() const {
  if (blocks_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out << "+";
    if (blocks_[i] == 1) {
      out << "C";
    } else {
      out << "M" << blocks_[i];
    }
  }
  return out.str();
}

FdAlgebra make_algebra(const std::vector<long long>& blocks) {
  std::vector<std::size_t> sizes;
  sizes.reserve(blocks.size());
  for (long long n : blocks) {
    if (n < 1) throw ValidationError("block size " + std::to_string(n) + " is not positive");
    sizes.push_back(static_cast<std::size_t>(n));
  }
  return FdAlgebra(std::move(sizes));
}

bool algebras_isomorphic(const FdAlgebra& a, const FdAlgebra& b) {
  auto x = a.blocks();
  auto y = b.blocks();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

Ideal::Ideal(FdAlgebra parent, std::vector<std::size_t> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw ValidationError("ideal members must be distinct");
  }
  if (!members_.empty() && members_.back() >= parent_.block_count()) {
    throw ValidationError("ideal member " + std::to_string(members_.back() + 1) +
                          " exceeds block count " +
                          std::to_string(parent_.block_count()));
  }
}

Ideal Ideal::full(const FdAlgebra& parent) {
  std::vector<std::size_t> all(parent.block_count());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Ideal(parent, std::move(all));
}

bool Ideal::contains(std::size_t block) const {
  return std::binary_search(members_.begin(), members_.end(), block);
}

FdAlgebra Ideal::algebra() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(members_.size());
  for (std::size_t i : members_) sizes.push_back(parent_.block_size(i));
  return FdAlgebra(std::move(sizes));
}

std::vector<std::size_t> Ideal::complement() const {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < parent_.block_count(); ++i) {
    if (!contains(i)) rest.push_back(i);
  }
  return rest;
}

bool Ideal::subset_of(const Ideal& other) const {
  return parent_ == other.parent_ &&
         std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

FdAlgebra quotient(const FdAlgebra& a, const Ideal& ideal) {
  if (!(ideal.parent() == a)) {
    throw ValidationError("ideal of " + ideal.parent().to_string() +
                          " used as an ideal of " + a.to_string());
  }
  std::vector<std::size_t> sizes;
  for (std::size_t i : ideal.complement()) sizes.push_back(a.block_size(i));
  return FdAlgebra(std::move(sizes));
}

}  // namespace enchilada
