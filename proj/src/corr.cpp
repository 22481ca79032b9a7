#include "enchilada/corr.hpp"

#include <sstream>

#include "enchilada/error.hpp"
#include "exact_rank.hpp"

namespace enchilada {

namespace {

void require_same_parent(const Ideal& ideal, const FdAlgebra& a, const char* what) {
  if (!(ideal.parent() == a)) {
    throw ValidationError(std::string(what) + ": ideal of " + ideal.parent().to_string() +
                          " does not belong to " + a.to_string());
  }
}

void require_finite(const CorrClass& x, const char* what) {
  if (x.matrix().has_inf()) {
    throw ValidationError(std::string(what) + " requires finite multiplicities");
  }
}

bool is_partial_permutation(const CardinalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Cardinal& c = m(i, j);
      if (!(c.is_zero() || c == Cardinal{1})) return false;
    }
    if (m.row_sum(i) > Cardinal{1}) return false;
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m.col_sum(j) > Cardinal{1}) return false;
  }
  return true;
}

std::vector<std::vector<std::uint64_t>> finite_entries(const CardinalMatrix& m) {
  std::vector<std::vector<std::uint64_t>> out(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).value();
  }
  return out;
}

// Splits an integer vector into its positive and negative parts.
std::pair<std::vector<Cardinal>, std::vector<Cardinal>> split_signs(
    const std::vector<detail::Integer>& v) {
  std::vector<Cardinal> pos(v.size()), neg(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] > 0) pos[k] = v[k].convert_to<std::uint64_t>();
    if (v[k] < 0) neg[k] = detail::Integer(-v[k]).convert_to<std::uint64_t>();
  }
  return {pos, neg};
}

std::size_t rational_rank(const CardinalMatrix& m) {
  std::vector<std::vector<detail::Rational>> q(m.rows(), std::vector<detail::Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) q[i][j] = detail::Rational(m(i, j).value());
  }
  return detail::reduce(std::move(q), m.cols()).rank;
}

constexpr const char* kProbeCaveat =
    "finite-rank probe: quantifies only over finite-entry test morphisms between "
    "finite-dimensional algebras; it does not decide cancellability in the full category";

}  // namespace

CorrClass::CorrClass(FdAlgebra source, FdAlgebra target, CardinalMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != source_.block_count() || matrix_.cols() != target_.block_count()) {
    throw ValidationError("matrix shape " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + " does not match " +
                          source_.to_string() + " -> " + target_.to_string());
  }
}

std::string CorrClass::to_string() const {
  std::ostringstream out;
  out << source_.to_string() << " -> " << target_.to_string() << " " << matrix_;
  return out.str();
}

CorrClass identity_corr(const FdAlgebra& a) {
  return CorrClass(a, a, CardinalMatrix::identity(a.block_count()));
}

CorrClass zero_corr(const FdAlgebra& source, const FdAlgebra& target) {
  return CorrClass(source, target, CardinalMatrix(source.block_count(), target.block_count()));
}

CorrClass compose(const CorrClass& x, const CorrClass& y) {
  if (!(x.target() == y.source())) {
    throw EndpointMismatch("cannot compose " + x.to_string() + " with " + y.to_string());
  }
  return CorrClass(x.source(), y.target(), x.matrix() * y.matrix());
}

CorrClass direct_sum(const CorrClass& x, const CorrClass& y) {
  if (!(x.source() == y.source()) || !(x.target() == y.target())) {
    throw EndpointMismatch("direct sum needs equal endpoints: " + x.to_string() + " vs " +
                           y.to_string());
  }
  return CorrClass(x.source(), x.target(), x.matrix() + y.matrix());
}

Ideal right_support(const CorrClass& x) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < x.matrix().cols(); ++j) {
    if (!x.matrix().col_is_zero(j)) cols.push_back(j);
  }
  return Ideal(x.target(), std::move(cols));
}

Ideal left_kernel(const CorrClass& x) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < x.matrix().rows(); ++i) {
    if (x.matrix().row_is_zero(i)) rows.push_back(i);
  }
  return Ideal(x.source(), std::move(rows));
}

bool is_full(const CorrClass& x) { return right_support(x).is_full(); }

bool phi_injective(const CorrClass& x) { return left_kernel(x).empty(); }

bool tensor_is_zero(const CorrClass& x, const CorrClass& y) {
  if (!(x.target() == y.source())) {
    throw EndpointMismatch("tensor_is_zero on non-composable pair " + x.to_string() + ", " +
                           y.to_string());
  }
  return right_support(x).subset_of(left_kernel(y));
}

CorrClass ideal_inclusion_corr(const Ideal& ideal) {
  const auto& members = ideal.members();
  CardinalMatrix m(members.size(), ideal.parent().block_count());
  for (std::size_t r = 0; r < members.size(); ++r) m(r, members[r]) = 1;
  return CorrClass(ideal.algebra(), ideal.parent(), std::move(m));
}

CorrClass quotient_corr(const FdAlgebra& b, const Ideal& ideal) {
  require_same_parent(ideal, b, "quotient_corr");
  const auto survivors = ideal.complement();
  CardinalMatrix m(b.block_count(), survivors.size());
  for (std::size_t c = 0; c < survivors.size(); ++c) m(survivors[c], c) = 1;
  return CorrClass(b, quotient(b, ideal), std::move(m));
}

CorrClass kernel(const CorrClass& x) { return ideal_inclusion_corr(left_kernel(x)); }

CorrClass cokernel(const CorrClass& x) { return quotient_corr(x.target(), right_support(x)); }

CorrClass schubert_image(const CorrClass& x) { return ideal_inclusion_corr(right_support(x)); }

CorrClass schubert_coimage(const CorrClass& x) {
  return quotient_corr(x.source(), left_kernel(x));
}

bool is_hilbert_bimodule(const CorrClass& x) { return is_partial_permutation(x.matrix()); }

bool is_split_mono(const CorrClass& x) {
  if (!is_hilbert_bimodule(x)) return false;
  for (std::size_t i = 0; i < x.matrix().rows(); ++i) {
    if (x.matrix().row_sum(i) != Cardinal{1}) return false;
  }
  return true;
}

bool is_split_epi(const CorrClass& x) {
  if (!is_hilbert_bimodule(x)) return false;
  for (std::size_t j = 0; j < x.matrix().cols(); ++j) {
    if (x.matrix().col_sum(j) != Cardinal{1}) return false;
  }
  return true;
}

bool is_invertible(const CorrClass& x) { return is_split_mono(x) && is_split_epi(x); }

CorrClass dual(const CorrClass& x) {
  if (!is_hilbert_bimodule(x)) {
    throw ValidationError("dual is defined only for Hilbert bimodules; got " + x.to_string());
  }
  return CorrClass(x.target(), x.source(), x.matrix().transpose());
}

CorrClass restrict_right(const CorrClass& x, const Ideal& c) {
  require_same_parent(c, x.target(), "restrict_right");
  if (!right_support(x).subset_of(c)) {
    throw ValidationError("restrict_right: right support of " + x.to_string() +
                          " is not inside the given ideal");
  }
  return CorrClass(x.source(), c.algebra(), x.matrix().select_cols(c.members()));
}

CorrClass factor_through_quotient(const CorrClass& x, const Ideal& i) {
  require_same_parent(i, x.source(), "factor_through_quotient");
  if (!i.subset_of(left_kernel(x))) {
    throw ValidationError("factor_through_quotient: ideal is not inside ker(phi) of " +
                          x.to_string());
  }
  return CorrClass(quotient(x.source(), i), x.target(), x.matrix().select_rows(i.complement()));
}

RankProbe mono_finite_rank_test(const CorrClass& x) {
  require_finite(x, "mono_finite_rank_test");
  const auto& m = x.matrix();
  // v X = 0  <=>  X^T v = 0
  const auto null = detail::right_null_vector(finite_entries(m.transpose()), m.rows());
  RankProbe probe;
  probe.caveat = kProbeCaveat;
  probe.passes = null.empty();
  probe.rank = rational_rank(m);
  if (!null.empty()) {
    auto [pos, neg] = split_signs(null);
    CardinalMatrix g(1, m.rows()), h(1, m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      g(0, i) = pos[i];
      h(0, i) = neg[i];
    }
    const FdAlgebra probe_source{1};
    probe.witness = CancellationWitness{CorrClass(probe_source, x.source(), std::move(g)),
                                        CorrClass(probe_source, x.source(), std::move(h))};
  }
  return probe;
}

RankProbe epi_finite_rank_test(const CorrClass& x) {
  require_finite(x, "epi_finite_rank_test");
  const auto& m = x.matrix();
  const auto null = detail::right_null_vector(finite_entries(m), m.cols());
  RankProbe probe;
  probe.caveat = kProbeCaveat;
  probe.passes = null.empty();
  probe.rank = rational_rank(m);
  if (!null.empty()) {
    auto [pos, neg] = split_signs(null);
    CardinalMatrix g(m.cols(), 1), h(m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      g(j, 0) = pos[j];
      h(j, 0) = neg[j];
    }
    const FdAlgebra probe_target{1};
    probe.witness = CancellationWitness{CorrClass(x.target(), probe_target, std::move(g)),
                                        CorrClass(x.target(), probe_target, std::move(h))};
  }
  return probe;
}

std::optional<CorrClass> right_inverse(const CorrClass& x) {
  const auto& m = x.matrix();
  CardinalMatrix inv(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < m.cols() && !found; ++j) {
      if (m(i, j) != Cardinal{1}) continue;
      bool private_col = true;
      for (std::size_t k = 0; k < m.rows(); ++k) {
        if (k != i && !m(k, j).is_zero()) private_col = false;
      }
      if (private_col) {
        inv(j, i) = 1;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return CorrClass(x.target(), x.source(), std::move(inv));
}

}  // namespace enchilada
