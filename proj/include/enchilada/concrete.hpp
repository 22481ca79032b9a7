#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "enchilada/algebra.hpp"
#include "enchilada/corr.hpp"

namespace enchilada::concrete {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Default tolerances of the numeric layer. Inputs are O(1)-scaled.
struct Tolerances {
  double axiom = 1e-9;          // validation of *-hom and inner product identities
  double null_relative = 1e-7;  // Gram eigenvalues below this * max(1, largest) are null
  double multiplicity = 1e-6;   // distance of a projection trace to the nearest integer
};

/// Element of a finite-dimensional algebra: one n_i x n_i matrix per block.
struct AlgebraElement {
  std::vector<Matrix> blocks;

  AlgebraElement adjoint() const;
  double norm() const;  // Frobenius norm over all blocks
};

AlgebraElement zero_element(const FdAlgebra& a);
AlgebraElement matrix_unit(const FdAlgebra& a, std::size_t block, std::size_t p, std::size_t q);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

/// Element of a module: one d_j x m_j matrix per target block j.
using ModuleElement = std::vector<Matrix>;

/// Operator on a module, one d_j x d_j matrix per fiber (L(X) = K(X) here).
using ModuleOperator = std::vector<Matrix>;

/// Right Hilbert module over `target` with fibers C^{d_j} (x) row(C^{m_j}).
/// <x, y> = (x_j^* y_j)_j.
class ConcreteModule {
public:
  ConcreteModule() = default;
  ConcreteModule(FdAlgebra target, std::vector<std::size_t> fiber_dims);

  const FdAlgebra& target() const noexcept { return target_; }
  const std::vector<std::size_t>& fiber_dims() const noexcept { return fiber_dims_; }
  /// Complex dimension, sum d_j * m_j.
  std::size_t dimension() const noexcept;
  bool is_zero() const noexcept { return dimension() == 0; }

  ModuleElement zero() const;
  ModuleElement unit(std::size_t fiber, std::size_t row, std::size_t col) const;
  std::vector<ModuleElement> basis() const;

  AlgebraElement inner(const ModuleElement& x, const ModuleElement& y) const;
  ModuleElement right_act(const ModuleElement& x, const AlgebraElement& b) const;

  friend bool operator==(const ConcreteModule&, const ConcreteModule&) = default;

private:
  FdAlgebra target_;
  std::vector<std::size_t> fiber_dims_;
};

/// unit_images[j][i][p * n_i + q] is the image of the source matrix unit
/// E^{(i)}_{pq} acting on fiber j.
using UnitImages = std::vector<std::vector<std::vector<Matrix>>>;

/// A correspondence given concretely: a module plus the images of all source
/// matrix units. Construction checks shapes only; `validate` checks axioms.
class ConcreteCorr {
public:
  ConcreteCorr() = default;
  ConcreteCorr(FdAlgebra source, ConcreteModule module, UnitImages images);

  const FdAlgebra& source() const noexcept { return source_; }
  const FdAlgebra& target() const noexcept { return module_.target(); }
  const ConcreteModule& module() const noexcept { return module_; }
  const UnitImages& unit_images() const noexcept { return images_; }

  const Matrix& unit_image(std::size_t fiber, std::size_t block, std::size_t p,
                           std::size_t q) const;
  /// phi_j(a) as a d_j x d_j matrix.
  Matrix action_matrix(std::size_t fiber, const AlgebraElement& a) const;
  ModuleOperator action(const AlgebraElement& a) const;
  ModuleElement left_act(const AlgebraElement& a, const ModuleElement& x) const;

private:
  FdAlgebra source_;
  ConcreteModule module_;
  UnitImages images_;
};

struct AxiomCheck {
  std::string name;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_violation <= tolerance; }
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  std::string summary() const;
};

/// Checks the *-homomorphism identities on matrix units, nondegeneracy, and
/// the inner-product axioms on a fixed sample of module elements.
ValidationReport validate(const ConcreteCorr& x, const Tolerances& tol = {});

/// Canonical model: fiber j carries k_ij copies of the standard
/// representation of source block i, stacked block-diagonally in block order.
ConcreteCorr realize(const CorrClass& k);

/// Multiplicities from the traces of the images of the minimal projections
/// E^{(i)}_{00}. Throws NumericError if validation fails or a trace is not
/// within `tol.multiplicity` of an integer.
CorrClass classify(const ConcreteCorr& x, const Tolerances& tol = {});

bool is_isomorphic(const ConcreteCorr& x, const ConcreteCorr& y, const Tolerances& tol = {});

/// Diagnostics of the Gram quotient for one fiber of the target algebra.
struct FiberQuotient {
  std::size_t generator_count = 0;  // algebraic tensor generators
  std::size_t surviving = 0;        // generators with nonzero Gram diagonal
  std::size_t rank = 0;             // quotient dimension
  double max_eigenvalue = 0.0;
  double min_eigenvalue = 0.0;      // over the surviving block
  double pruned_residual = 0.0;     // largest Gram entry touching a pruned generator
};

/// X (x)_B Y realized: the Hausdorff quotient of the algebraic tensor product
/// of generators, re-expressed in canonical fiber form.
class InteriorTensor {
public:
  const ConcreteCorr& corr() const noexcept { return corr_; }
  const std::vector<FiberQuotient>& fibers() const noexcept { return fibers_; }
  /// sqrt of the largest scalar Gram eigenvalue; 0 for the zero module.
  double norm() const noexcept { return norm_; }

  /// Image of the elementary tensor x (x) y in the composite module.
  ModuleElement coordinates(const ModuleElement& x, const ModuleElement& y) const;

private:
  friend InteriorTensor interior_tensor(const ConcreteCorr&, const ConcreteCorr&,
                                        const Tolerances&);

  struct Generator {
    std::size_t x_fiber;
    std::size_t x_row;
    std::size_t y_row;
  };

  ConcreteCorr left_;
  ConcreteCorr right_;
  ConcreteCorr corr_;
  std::vector<FiberQuotient> fibers_;
  std::vector<std::vector<Generator>> kept_;  // per target fiber
  std::vector<Matrix> bases_;                 // per target fiber: kept x rank
  double norm_ = 0.0;
};

InteriorTensor interior_tensor(const ConcreteCorr& x, const ConcreteCorr& y,
                               const Tolerances& tol = {});

/// Realization of the dual B-A Hilbert bimodule. Requires classify(x) to be a
/// partial permutation matrix; throws ValidationError otherwise.
ConcreteCorr dual_concrete(const ConcreteCorr& x, const Tolerances& tol = {});
/// The vector x~ in dual_concrete(x) corresponding to v in x.
ModuleElement dual_vector(const ConcreteCorr& x, const ModuleElement& v,
                          const Tolerances& tol = {});

/// theta_{x,y} z = x <y, z>, returned as (x_j y_j^*)_j.
ModuleOperator rank_one(const ConcreteModule& module, const ModuleElement& x,
                        const ModuleElement& y);
ModuleElement apply(const ModuleOperator& t, const ModuleElement& x);

/// Attempts to build an A-valued inner product <x,y>_A = phi^{-1}(theta_{x,y})
/// on a basis and checks <x,y>_A z = x <y,z>_B. `exists` is false when some
/// rank-one operator lies outside phi(A).
struct LeftInnerProductCheck {
  bool exists = false;
  double max_residual = 0.0;
};
LeftInnerProductCheck left_inner_product(const ConcreteCorr& x, const Tolerances& tol = {});

}  // namespace enchilada::concrete
