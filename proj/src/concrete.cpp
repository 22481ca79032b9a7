#include "enchilada/concrete.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "enchilada/error.hpp"

namespace enchilada::concrete {

namespace {

Matrix unit_matrix(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1.0;
  return m;
}

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Deterministic sample of module elements for the inner-product axioms.
std::vector<ModuleElement> sample_elements(const ConcreteModule& module, std::size_t count) {
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<ModuleElement> out;
  for (std::size_t s = 0; s < count; ++s) {
    ModuleElement x = module.zero();
    for (auto& block : x) {
      for (Eigen::Index k = 0; k < block.size(); ++k) {
        block.data()[k] = Complex(normal(rng), normal(rng)) / 2.0;
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

AlgebraElement sample_algebra_element(const FdAlgebra& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  AlgebraElement e = zero_element(a);
  for (auto& block : e.blocks) {
    for (Eigen::Index k = 0; k < block.size(); ++k) {
      block.data()[k] = Complex(normal(rng), normal(rng)) / 2.0;
    }
  }
  return e;
}

double element_distance(const ModuleElement& x, const ModuleElement& y) {
  double d = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) d = std::max(d, max_abs(x[j] - y[j]));
  return d;
}

double algebra_distance(const AlgebraElement& a, const AlgebraElement& b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.blocks.size(); ++j) {
    d = std::max(d, max_abs(a.blocks[j] - b.blocks[j]));
  }
  return d;
}

// For a Hilbert bimodule: source block acting on each fiber (or npos).
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::vector<std::size_t> fiber_owners(const ConcreteCorr& x, const Tolerances& tol) {
  const CorrClass k = classify(x, tol);
  if (!is_hilbert_bimodule(k)) {
    throw ValidationError("dual requires a Hilbert bimodule; multiplicities are " +
                          k.matrix().to_string());
  }
  std::vector<std::size_t> owner(k.target().block_count(), kNone);
  for (std::size_t i = 0; i < k.source().block_count(); ++i) {
    for (std::size_t j = 0; j < k.target().block_count(); ++j) {
      if (k.matrix()(i, j) == Cardinal{1}) owner[j] = i;
    }
  }
  return owner;
}

// W with phi_j(E_pq) = W E_pq W^*, for a fiber carrying one copy of block i.
Matrix intertwiner(const ConcreteCorr& x, std::size_t fiber, std::size_t block) {
  const std::size_t n = x.source().block_size(block);
  const Matrix& p00 = x.unit_image(fiber, block, 0, 0);
  Eigen::Index best = 0;
  p00.colwise().norm().maxCoeff(&best);
  Eigen::VectorXcd w0 = p00.col(best);
  w0.normalize();
  Matrix w(p00.rows(), idx(n));
  for (std::size_t p = 0; p < n; ++p) w.col(idx(p)) = x.unit_image(fiber, block, p, 0) * w0;
  return w;
}

}  // namespace

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement out;
  out.blocks.reserve(blocks.size());
  for (const auto& b : blocks) out.blocks.push_back(b.adjoint());
  return out;
}

double AlgebraElement::norm() const {
  double s = 0.0;
  for (const auto& b : blocks) s += b.squaredNorm();
  return std::sqrt(s);
}

AlgebraElement zero_element(const FdAlgebra& a) {
  AlgebraElement e;
  for (std::size_t n : a.blocks()) e.blocks.push_back(Matrix::Zero(idx(n), idx(n)));
  return e;
}

AlgebraElement matrix_unit(const FdAlgebra& a, std::size_t block, std::size_t p,
                           std::size_t q) {
  AlgebraElement e = zero_element(a);
  e.blocks.at(block)(idx(p), idx(q)) = 1.0;
  return e;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement c;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) c.blocks.push_back(a.blocks[i] * b.blocks[i]);
  return c;
}

// ---------------------------------------------------------------------------
// ConcreteModule

ConcreteModule::ConcreteModule(FdAlgebra target, std::vector<std::size_t> fiber_dims)
    : target_(std::move(target)), fiber_dims_(std::move(fiber_dims)) {
  if (fiber_dims_.size() != target_.block_count()) {
    throw ValidationError("one fiber dimension per target block required");
  }
}

std::size_t ConcreteModule::dimension() const noexcept {
  std::size_t d = 0;
  for (std::size_t j = 0; j < fiber_dims_.size(); ++j) d += fiber_dims_[j] * target_.blocks()[j];
  return d;
}

ModuleElement ConcreteModule::zero() const {
  ModuleElement x;
  for (std::size_t j = 0; j < fiber_dims_.size(); ++j) {
    x.push_back(Matrix::Zero(idx(fiber_dims_[j]), idx(target_.block_size(j))));
  }
  return x;
}

ModuleElement ConcreteModule::unit(std::size_t fiber, std::size_t row, std::size_t col) const {
  ModuleElement x = zero();
  x.at(fiber)(idx(row), idx(col)) = 1.0;
  return x;
}

std::vector<ModuleElement> ConcreteModule::basis() const {
  std::vector<ModuleElement> out;
  for (std::size_t j = 0; j < fiber_dims_.size(); ++j) {
    for (std::size_t r = 0; r < fiber_dims_[j]; ++r) {
      for (std::size_t c = 0; c < target_.block_size(j); ++c) out.push_back(unit(j, r, c));
    }
  }
  return out;
}

AlgebraElement ConcreteModule::inner(const ModuleElement& x, const ModuleElement& y) const {
  AlgebraElement e;
  for (std::size_t j = 0; j < fiber_dims_.size(); ++j) e.blocks.push_back(x[j].adjoint() * y[j]);
  return e;
}

ModuleElement ConcreteModule::right_act(const ModuleElement& x, const AlgebraElement& b) const {
  ModuleElement out;
  for (std::size_t j = 0; j < fiber_dims_.size(); ++j) out.push_back(x[j] * b.blocks[j]);
  return out;
}

// ---------------------------------------------------------------------------
// ConcreteCorr

ConcreteCorr::ConcreteCorr(FdAlgebra source, ConcreteModule module, UnitImages images)
    : source_(std::move(source)), module_(std::move(module)), images_(std::move(images)) {
  const auto& dims = module_.fiber_dims();
  if (images_.size() != dims.size()) throw ValidationError("unit images: wrong fiber count");
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (images_[j].size() != source_.block_count()) {
      throw ValidationError("unit images: wrong source block count");
    }
    for (std::size_t i = 0; i < source_.block_count(); ++i) {
      const std::size_t n = source_.block_size(i);
      if (images_[j][i].size() != n * n) throw ValidationError("unit images: wrong unit count");
      for (const auto& m : images_[j][i]) {
        if (m.rows() != idx(dims[j]) || m.cols() != idx(dims[j])) {
          throw ValidationError("unit images: operator does not match fiber dimension");
        }
      }
    }
  }
}

const Matrix& ConcreteCorr::unit_image(std::size_t fiber, std::size_t block, std::size_t p,
                                       std::size_t q) const {
  return images_.at(fiber).at(block).at(p * source_.block_size(block) + q);
}

Matrix ConcreteCorr::action_matrix(std::size_t fiber, const AlgebraElement& a) const {
  const std::size_t d = module_.fiber_dims().at(fiber);
  Matrix out = Matrix::Zero(idx(d), idx(d));
  for (std::size_t i = 0; i < source_.block_count(); ++i) {
    const std::size_t n = source_.block_size(i);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        const Complex c = a.blocks[i](idx(p), idx(q));
        if (c != Complex(0.0)) out += c * unit_image(fiber, i, p, q);
      }
    }
  }
  return out;
}

ModuleOperator ConcreteCorr::action(const AlgebraElement& a) const {
  ModuleOperator t;
  for (std::size_t j = 0; j < module_.fiber_dims().size(); ++j) t.push_back(action_matrix(j, a));
  return t;
}

ModuleElement ConcreteCorr::left_act(const AlgebraElement& a, const ModuleElement& x) const {
  return concrete::apply(action(a), x);
}

// ---------------------------------------------------------------------------
// Validation

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed(); });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed() ? "ok   " : "FAIL ") << c.name << " (max violation " << c.max_violation
        << ", tol " << c.tolerance << ")\n";
  }
  return out.str();
}

ValidationReport validate(const ConcreteCorr& x, const Tolerances& tol) {
  const FdAlgebra& a = x.source();
  const ConcreteModule& module = x.module();
  const auto& dims = module.fiber_dims();

  AxiomCheck mult{"multiplicativity on matrix units", 0.0, tol.axiom};
  AxiomCheck adj{"adjoint on matrix units", 0.0, tol.axiom};
  AxiomCheck nondeg{"nondegeneracy AX = X", 0.0, tol.axiom};

  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (dims[j] == 0) continue;
    Matrix unit_sum = Matrix::Zero(idx(dims[j]), idx(dims[j]));
    for (std::size_t i = 0; i < a.block_count(); ++i) {
      const std::size_t n = a.block_size(i);
      for (std::size_t p = 0; p < n; ++p) {
        unit_sum += x.unit_image(j, i, p, p);
        for (std::size_t q = 0; q < n; ++q) {
          const Matrix& e_pq = x.unit_image(j, i, p, q);
          adj.max_violation =
              std::max(adj.max_violation, max_abs(e_pq.adjoint() - x.unit_image(j, i, q, p)));
          for (std::size_t i2 = 0; i2 < a.block_count(); ++i2) {
            const std::size_t n2 = a.block_size(i2);
            for (std::size_t r = 0; r < n2; ++r) {
              for (std::size_t s = 0; s < n2; ++s) {
                Matrix expected = Matrix::Zero(idx(dims[j]), idx(dims[j]));
                if (i2 == i && q == r) expected = x.unit_image(j, i, p, s);
                mult.max_violation = std::max(
                    mult.max_violation, max_abs(e_pq * x.unit_image(j, i2, r, s) - expected));
              }
            }
          }
        }
      }
    }
    nondeg.max_violation = std::max(
        nondeg.max_violation,
        max_abs(unit_sum - Matrix::Identity(idx(dims[j]), idx(dims[j]))));
  }

  AxiomCheck linear{"<x, yb> = <x, y> b", 0.0, tol.axiom};
  AxiomCheck herm{"<x, y>^* = <y, x>", 0.0, tol.axiom};
  AxiomCheck pos{"<x, x> >= 0", 0.0, tol.axiom};
  AxiomCheck definite{"<x, x> = 0 only for x = 0", 0.0, tol.axiom};
  AxiomCheck adjointable{"<ax, y> = <x, a^* y>", 0.0, tol.axiom};

  const auto samples = sample_elements(module, 3);
  const AlgebraElement b = sample_algebra_element(module.target(), 11);
  const AlgebraElement s = sample_algebra_element(a, 13);
  for (const auto& u : samples) {
    const AlgebraElement uu = module.inner(u, u);
    double trace = 0.0;
    for (const auto& blk : uu.blocks) {
      if (blk.size() == 0) continue;
      const Eigen::SelfAdjointEigenSolver<Matrix> es(blk, Eigen::EigenvaluesOnly);
      pos.max_violation = std::max(pos.max_violation, std::max(0.0, -es.eigenvalues().minCoeff()));
      trace += blk.trace().real();
    }
    double sq = 0.0;
    for (const auto& blk : u) sq += blk.squaredNorm();
    definite.max_violation = std::max(definite.max_violation, std::abs(trace - sq));

    for (const auto& v : samples) {
      linear.max_violation =
          std::max(linear.max_violation, algebra_distance(module.inner(u, module.right_act(v, b)),
                                                          module.inner(u, v) * b));
      herm.max_violation = std::max(
          herm.max_violation, algebra_distance(module.inner(u, v).adjoint(), module.inner(v, u)));
      adjointable.max_violation = std::max(
          adjointable.max_violation,
          algebra_distance(module.inner(x.left_act(s, u), v),
                           module.inner(u, x.left_act(s.adjoint(), v))));
    }
  }

  ValidationReport report;
  report.checks = {mult, adj, nondeg, linear, herm, pos, definite, adjointable};
  return report;
}

// ---------------------------------------------------------------------------
// realize / classify

ConcreteCorr realize(const CorrClass& k) {
  if (k.matrix().has_inf()) {
    throw ValidationError("realize: infinite multiplicities have no concrete model");
  }
  const FdAlgebra& a = k.source();
  const FdAlgebra& b = k.target();
  std::vector<std::size_t> dims(b.block_count(), 0);
  for (std::size_t j = 0; j < b.block_count(); ++j) {
    for (std::size_t i = 0; i < a.block_count(); ++i) {
      dims[j] += k.matrix()(i, j).value() * a.block_size(i);
    }
  }
  UnitImages images(b.block_count());
  for (std::size_t j = 0; j < b.block_count(); ++j) {
    images[j].resize(a.block_count());
    std::size_t offset = 0;
    for (std::size_t i = 0; i < a.block_count(); ++i) {
      const std::size_t n = a.block_size(i);
      const std::size_t copies = k.matrix()(i, j).value();
      images[j][i].assign(n * n, Matrix::Zero(idx(dims[j]), idx(dims[j])));
      for (std::size_t c = 0; c < copies; ++c) {
        for (std::size_t p = 0; p < n; ++p) {
          for (std::size_t q = 0; q < n; ++q) {
            images[j][i][p * n + q](idx(offset + p), idx(offset + q)) = 1.0;
          }
        }
        offset += n;
      }
    }
  }
  return ConcreteCorr(a, ConcreteModule(b, std::move(dims)), std::move(images));
}

CorrClass classify(const ConcreteCorr& x, const Tolerances& tol) {
  const ValidationReport report = validate(x, tol);
  if (!report.ok()) throw NumericError("classify: validation failed\n" + report.summary());
  const FdAlgebra& a = x.source();
  const FdAlgebra& b = x.target();
  CardinalMatrix k(a.block_count(), b.block_count());
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    for (std::size_t j = 0; j < b.block_count(); ++j) {
      const double t = x.unit_image(j, i, 0, 0).trace().real();
      const double rounded = std::round(t);
      if (std::abs(t - rounded) > tol.multiplicity || rounded < 0) {
        throw NumericError("classify: projection trace " + std::to_string(t) +
                           " is not a nonnegative integer");
      }
      k(i, j) = static_cast<std::uint64_t>(rounded);
    }
  }
  return CorrClass(a, b, std::move(k));
}

bool is_isomorphic(const ConcreteCorr& x, const ConcreteCorr& y, const Tolerances& tol) {
  if (!(x.source() == y.source()) || !(x.target() == y.target())) {
    throw EndpointMismatch("is_isomorphic needs equal endpoints");
  }
  return classify(x, tol) == classify(y, tol);
}

// ---------------------------------------------------------------------------
// Interior tensor product
//
// Generators of X (x)_B Y over C-fiber l are x_{j,a} (x) y_{l,c}, where x_{j,a}
// is the unit of X's fiber j at (a, 0) and y_{l,c} the unit of Y's fiber l at
// (c, 0). The first-column units generate X as a right B-module, so by
// balancing these span everything landing in column 0 of fiber l, which is
// the canonical C^{D_l}.

InteriorTensor interior_tensor(const ConcreteCorr& x, const ConcreteCorr& y,
                               const Tolerances& tol) {
  if (!(x.target() == y.source())) {
    throw EndpointMismatch("interior_tensor: target " + x.target().to_string() +
                           " does not match source " + y.source().to_string());
  }
  const FdAlgebra& a = x.source();
  const FdAlgebra& b = x.target();
  const FdAlgebra& c = y.target();
  const ConcreteModule& xm = x.module();

  struct XGen {
    std::size_t fiber;
    std::size_t row;
  };
  std::vector<XGen> xgens;
  for (std::size_t j = 0; j < b.block_count(); ++j) {
    for (std::size_t r = 0; r < xm.fiber_dims()[j]; ++r) xgens.push_back({j, r});
  }
  const std::size_t nx = xgens.size();

  // B-valued inner products of the X generators.
  std::vector<std::vector<AlgebraElement>> bx(nx, std::vector<AlgebraElement>(nx));
  for (std::size_t u = 0; u < nx; ++u) {
    const ModuleElement xu = xm.unit(xgens[u].fiber, xgens[u].row, 0);
    for (std::size_t v = 0; v < nx; ++v) {
      bx[u][v] = xm.inner(xu, xm.unit(xgens[v].fiber, xgens[v].row, 0));
    }
  }

  InteriorTensor out;
  out.left_ = x;
  out.right_ = y;
  std::vector<std::size_t> dims(c.block_count(), 0);
  UnitImages images(c.block_count());

  for (std::size_t l = 0; l < c.block_count(); ++l) {
    const std::size_t dy = y.module().fiber_dims()[l];
    const std::size_t n = nx * dy;
    FiberQuotient fq;
    fq.generator_count = n;

    // Scalar Gram: trace of <y_c, <x_u, x_v>_B y_c'>_C = phi^Y_l(<x_u,x_v>)(c, c').
    Matrix gram = Matrix::Zero(idx(n), idx(n));
    for (std::size_t u = 0; u < nx; ++u) {
      for (std::size_t v = 0; v < nx; ++v) {
        if (bx[u][v].norm() == 0.0) continue;
        const Matrix m = y.action_matrix(l, bx[u][v]);
        gram.block(idx(u * dy), idx(v * dy), idx(dy), idx(dy)) = m;
      }
    }

    std::vector<std::size_t> kept;
    for (std::size_t g = 0; g < n; ++g) {
      if (std::abs(gram(idx(g), idx(g))) > tol.axiom) {
        kept.push_back(g);
      } else {
        fq.pruned_residual = std::max(fq.pruned_residual, gram.row(idx(g)).cwiseAbs().maxCoeff());
      }
    }
    fq.surviving = kept.size();

    Matrix sub(idx(kept.size()), idx(kept.size()));
    for (std::size_t r = 0; r < kept.size(); ++r) {
      for (std::size_t s = 0; s < kept.size(); ++s) sub(idx(r), idx(s)) = gram(idx(kept[r]), idx(kept[s]));
    }

    Matrix basis(idx(kept.size()), 0);
    if (!kept.empty()) {
      const Eigen::SelfAdjointEigenSolver<Matrix> es(sub);
      const Eigen::VectorXd& lambda = es.eigenvalues();
      fq.max_eigenvalue = lambda.maxCoeff();
      fq.min_eigenvalue = lambda.minCoeff();
      const double cutoff = tol.null_relative * std::max(1.0, fq.max_eigenvalue);
      std::vector<Eigen::Index> cols;
      for (Eigen::Index e = 0; e < lambda.size(); ++e) {
        if (lambda(e) > cutoff) cols.push_back(e);
      }
      basis.resize(idx(kept.size()), idx(cols.size()));
      for (std::size_t k = 0; k < cols.size(); ++k) {
        basis.col(idx(k)) = es.eigenvectors().col(cols[k]) / std::sqrt(lambda(cols[k]));
      }
    }
    fq.rank = static_cast<std::size_t>(basis.cols());
    dims[l] = fq.rank;
    out.norm_ = std::max(out.norm_, std::sqrt(std::max(0.0, fq.max_eigenvalue)));

    // <v_k, E v_k'> = V^* G T V with T the action on generators.
    const Matrix gv = sub * basis;
    images[l].resize(a.block_count());
    for (std::size_t i = 0; i < a.block_count(); ++i) {
      const std::size_t ni = a.block_size(i);
      images[l][i].reserve(ni * ni);
      for (std::size_t p = 0; p < ni; ++p) {
        for (std::size_t q = 0; q < ni; ++q) {
          Matrix t = Matrix::Zero(idx(kept.size()), idx(kept.size()));
          for (std::size_t s = 0; s < kept.size(); ++s) {
            const std::size_t u = kept[s] / dy;
            const std::size_t cc = kept[s] % dy;
            const Matrix& phi = x.unit_image(xgens[u].fiber, i, p, q);
            for (std::size_t r = 0; r < kept.size(); ++r) {
              const std::size_t u2 = kept[r] / dy;
              if (kept[r] % dy != cc || xgens[u2].fiber != xgens[u].fiber) continue;
              t(idx(r), idx(s)) = phi(idx(xgens[u2].row), idx(xgens[u].row));
            }
          }
          images[l][i].push_back(gv.adjoint() * (t * basis));
        }
      }
    }

    std::vector<InteriorTensor::Generator> kept_gens;
    for (std::size_t g : kept) {
      kept_gens.push_back({xgens[g / dy].fiber, xgens[g / dy].row, g % dy});
    }
    out.kept_.push_back(std::move(kept_gens));
    out.bases_.push_back(std::move(basis));
    out.fibers_.push_back(fq);
  }

  out.corr_ = ConcreteCorr(a, ConcreteModule(c, std::move(dims)), std::move(images));
  return out;
}

ModuleElement InteriorTensor::coordinates(const ModuleElement& x, const ModuleElement& y) const {
  const ConcreteModule& xm = left_.module();
  const ConcreteModule& ym = right_.module();
  const FdAlgebra& c = right_.target();
  ModuleElement z = corr_.module().zero();
  for (std::size_t l = 0; l < c.block_count(); ++l) {
    const auto& kept = kept_[l];
    // Row g: the (0, col) entries of <x_u (x) y_c, x (x) y>_C.
    Matrix pairing = Matrix::Zero(idx(kept.size()), idx(c.block_size(l)));
    for (std::size_t g = 0; g < kept.size(); ++g) {
      const ModuleElement xu = xm.unit(kept[g].x_fiber, kept[g].x_row, 0);
      const ModuleElement yc = ym.unit(l, kept[g].y_row, 0);
      const ModuleElement w = right_.left_act(xm.inner(xu, x), y);
      pairing.row(idx(g)) = ym.inner(yc, w).blocks[l].row(0);
    }
    z[l] = bases_[l].adjoint() * pairing;
  }
  return z;
}

// ---------------------------------------------------------------------------
// Duals, rank-one operators, left inner products

ConcreteCorr dual_concrete(const ConcreteCorr& x, const Tolerances& tol) {
  const auto owner = fiber_owners(x, tol);
  const FdAlgebra& a = x.source();
  const FdAlgebra& b = x.target();
  // Fiber of the dual over A-block i is row(C^{n_i}) tensored with C^{m_j},
  // j the fiber owned by i; B acts there by left multiplication.
  std::vector<std::size_t> dims(a.block_count(), 0);
  std::vector<std::size_t> fiber_of(a.block_count(), kNone);
  for (std::size_t j = 0; j < owner.size(); ++j) {
    if (owner[j] != kNone) {
      dims[owner[j]] = b.block_size(j);
      fiber_of[owner[j]] = j;
    }
  }
  UnitImages images(a.block_count());
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    images[i].resize(b.block_count());
    for (std::size_t j = 0; j < b.block_count(); ++j) {
      const std::size_t m = b.block_size(j);
      images[i][j].assign(m * m, Matrix::Zero(idx(dims[i]), idx(dims[i])));
      if (fiber_of[i] != j) continue;
      for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) images[i][j][p * m + q] = unit_matrix(m, m, p, q);
      }
    }
  }
  return ConcreteCorr(b, ConcreteModule(a, std::move(dims)), std::move(images));
}

ModuleElement dual_vector(const ConcreteCorr& x, const ModuleElement& v, const Tolerances& tol) {
  const auto owner = fiber_owners(x, tol);
  const ConcreteCorr d = dual_concrete(x, tol);
  ModuleElement out = d.module().zero();
  for (std::size_t j = 0; j < owner.size(); ++j) {
    if (owner[j] == kNone) continue;
    out[owner[j]] = v[j].adjoint() * intertwiner(x, j, owner[j]);
  }
  return out;
}

ModuleOperator rank_one(const ConcreteModule& module, const ModuleElement& x,
                        const ModuleElement& y) {
  if (x.size() != module.fiber_dims().size() || y.size() != x.size()) {
    throw ValidationError("rank_one: elements do not belong to the module");
  }
  ModuleOperator t;
  for (std::size_t j = 0; j < x.size(); ++j) t.push_back(x[j] * y[j].adjoint());
  return t;
}

ModuleElement apply(const ModuleOperator& t, const ModuleElement& x) {
  ModuleElement out;
  for (std::size_t j = 0; j < x.size(); ++j) out.push_back(t[j] * x[j]);
  return out;
}

LeftInnerProductCheck left_inner_product(const ConcreteCorr& x, const Tolerances& tol) {
  const FdAlgebra& a = x.source();
  const ConcreteModule& module = x.module();
  const auto& dims = module.fiber_dims();

  // Columns: vectorized phi(E^{(i)}_{pq}) across all fibers.
  std::size_t rows = 0;
  for (std::size_t d : dims) rows += d * d;
  LeftInnerProductCheck check;
  if (rows == 0) {
    check.exists = true;  // the zero module
    return check;
  }
  std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> units;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    for (std::size_t p = 0; p < a.block_size(i); ++p) {
      for (std::size_t q = 0; q < a.block_size(i); ++q) units.push_back({i, {p, q}});
    }
  }
  auto vectorize = [&](const ModuleOperator& t) {
    Eigen::VectorXcd v(idx(rows));
    std::size_t o = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
      for (Eigen::Index k = 0; k < t[j].size(); ++k) v(idx(o++)) = t[j].data()[k];
    }
    return v;
  };
  Matrix phi(idx(rows), idx(units.size()));
  for (std::size_t u = 0; u < units.size(); ++u) {
    phi.col(idx(u)) = vectorize(
        x.action(matrix_unit(a, units[u].first, units[u].second.first, units[u].second.second)));
  }
  const Eigen::CompleteOrthogonalDecomposition<Matrix> cod(phi);

  const auto basis = module.basis();
  for (const auto& u : basis) {
    for (const auto& v : basis) {
      const ModuleOperator theta = rank_one(module, u, v);
      const Eigen::VectorXcd target = vectorize(theta);
      if (target.norm() == 0.0) continue;
      const Eigen::VectorXcd coeff = cod.solve(target);
      AlgebraElement left = zero_element(a);
      for (std::size_t k = 0; k < units.size(); ++k) {
        left.blocks[units[k].first](idx(units[k].second.first), idx(units[k].second.second)) =
            coeff(idx(k));
      }
      // <u, v>_A z = u <v, z>_B on basis vectors z.
      for (const auto& z : basis) {
        const double r =
            element_distance(x.left_act(left, z), module.right_act(u, module.inner(v, z)));
        check.max_residual = std::max(check.max_residual, r);
      }
    }
  }
  check.exists = check.max_residual <= tol.multiplicity;
  return check;
}

}  // namespace enchilada::concrete
