#pragma once

#include <optional>
#include <string>

#include "enchilada/algebra.hpp"
#include "enchilada/cardinal.hpp"

namespace enchilada {

/// Isomorphism class of a nondegenerate correspondence between
/// finite-dimensional C*-algebras.
///
/// Entry (i, j) of the multiplicity matrix counts how many times source
/// block i acts on the fiber of target block j. Two classes with equal
/// endpoints are isomorphic exactly when their matrices agree.
class CorrClass {
public:
  CorrClass() = default;
  CorrClass(FdAlgebra source, FdAlgebra target, CardinalMatrix matrix);

  const FdAlgebra& source() const noexcept { return source_; }
  const FdAlgebra& target() const noexcept { return target_; }
  const CardinalMatrix& matrix() const noexcept { return matrix_; }

  bool is_zero() const { return matrix_.is_zero(); }

  std::string to_string() const;

  friend bool operator==(const CorrClass&, const CorrClass&) = default;

private:
  FdAlgebra source_;
  FdAlgebra target_;
  CardinalMatrix matrix_;
};

CorrClass identity_corr(const FdAlgebra& a);
CorrClass zero_corr(const FdAlgebra& source, const FdAlgebra& target);

/// Balanced tensor product X (x)_B Y, i.e. the morphism "X then Y".
CorrClass compose(const CorrClass& x, const CorrClass& y);
CorrClass direct_sum(const CorrClass& x, const CorrClass& y);

/// B_X: target blocks reached by some inner product.
Ideal right_support(const CorrClass& x);
/// ker(phi_X): source blocks acting as zero.
Ideal left_kernel(const CorrClass& x);

bool is_full(const CorrClass& x);
bool phi_injective(const CorrClass& x);

/// X (x)_B Y = 0 iff B_X is contained in ker(phi_Y).
bool tensor_is_zero(const CorrClass& x, const CorrClass& y);

CorrClass ideal_inclusion_corr(const Ideal& ideal);
CorrClass quotient_corr(const FdAlgebra& b, const Ideal& ideal);

CorrClass kernel(const CorrClass& x);
CorrClass cokernel(const CorrClass& x);
CorrClass schubert_image(const CorrClass& x);
CorrClass schubert_coimage(const CorrClass& x);

/// Partial permutation matrix: entries in {0,1}, at most one 1 per row and
/// per column.
bool is_hilbert_bimodule(const CorrClass& x);
/// Left-full Hilbert bimodule (no zero rows).
bool is_split_mono(const CorrClass& x);
/// Right-full Hilbert bimodule (no zero columns).
bool is_split_epi(const CorrClass& x);
/// Permutation matrix; block sizes on the two sides may differ.
bool is_invertible(const CorrClass& x);

/// Transpose of a Hilbert bimodule; throws ValidationError otherwise.
CorrClass dual(const CorrClass& x);

/// Corestriction to an ideal C of the target containing B_X.
CorrClass restrict_right(const CorrClass& x, const Ideal& c);
/// Factorization through A/I for an ideal I inside ker(phi_X).
CorrClass factor_through_quotient(const CorrClass& x, const Ideal& i);

/// A pair of distinct test morphisms that the probed morphism fails to
/// separate. For the mono probe both are D -> source with D = C, for the
/// epi probe both are target -> D.
struct CancellationWitness {
  CorrClass g;
  CorrClass h;
};

/// Result of a finite-rank cancellability probe.
///
/// The probe only quantifies over test morphisms with finite entries between
/// finite-dimensional algebras; `caveat` says so in words and is always set.
struct RankProbe {
  bool passes = false;
  std::size_t rank = 0;
  std::optional<CancellationWitness> witness;
  std::string caveat;
};

/// Left-cancellability against finite-entry tests: full row rank over Q.
RankProbe mono_finite_rank_test(const CorrClass& x);
/// Right-cancellability against finite-entry tests: full column rank over Q.
RankProbe epi_finite_rank_test(const CorrClass& x);

/// True when some M : target -> source has compose(x, M) = identity, i.e.
/// every row owns a column whose only nonzero entry is a 1 in that row.
/// Returns the canonical right inverse when it exists.
std::optional<CorrClass> right_inverse(const CorrClass& x);

}  // namespace enchilada
