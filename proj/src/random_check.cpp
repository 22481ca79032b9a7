#include "enchilada/random_check.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "enchilada/corr.hpp"
#include "enchilada/exactness.hpp"

namespace enchilada {

namespace {

using Failure = std::optional<std::string>;
using Case = std::function<Failure(InstanceGenerator&)>;

constexpr std::size_t kMaxSamples = 3;

// Columns of w outside `keep` are cleared.
CorrClass clear_cols(const CorrClass& w, const Ideal& keep) {
  CardinalMatrix m = w.matrix();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (keep.contains(j)) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = 0;
  }
  return CorrClass(w.source(), w.target(), std::move(m));
}

CorrClass clear_rows(const CorrClass& w, const Ideal& keep) {
  CardinalMatrix m = w.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (keep.contains(i)) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = 0;
  }
  return CorrClass(w.source(), w.target(), std::move(m));
}

// A random partial permutation a -> b.
CorrClass partial_permutation(InstanceGenerator& gen, const FdAlgebra& a, const FdAlgebra& b) {
  CardinalMatrix m(a.block_count(), b.block_count());
  std::vector<std::size_t> cols(b.block_count());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  for (std::size_t j = cols.size(); j > 1; --j) std::swap(cols[j - 1], cols[gen.below(j)]);
  for (std::size_t i = 0; i < a.block_count() && i < cols.size(); ++i) {
    if (gen.below(3) != 0) m(i, cols[i]) = 1;
  }
  return CorrClass(a, b, std::move(m));
}

std::vector<std::pair<std::string, Case>> suites(const RandomCheckOptions& opt) {
  const auto tol = opt.tolerances;
  std::vector<std::pair<std::string, Case>> out;

  out.emplace_back("compose laws (with inf)", [](InstanceGenerator& g) -> Failure {
    const FdAlgebra a = g.algebra(true), b = g.algebra(true), c = g.algebra(true),
                    d = g.algebra(true);
    const CorrClass x = g.corr_with_inf(a, b, 0.15);
    const CorrClass y = g.corr_with_inf(b, c, 0.15);
    const CorrClass z = g.corr_with_inf(c, d, 0.15);
    if (!(compose(compose(x, y), z) == compose(x, compose(y, z)))) {
      return "associativity fails for " + x.to_string() + ", " + y.to_string() + ", " +
             z.to_string();
    }
    if (!(compose(identity_corr(a), x) == x) || !(compose(x, identity_corr(b)) == x)) {
      return "unit law fails for " + x.to_string();
    }
    return std::nullopt;
  });

  out.emplace_back("zero tensor criterion", [](InstanceGenerator& g) -> Failure {
    const FdAlgebra a = g.algebra(), b = g.algebra(), c = g.algebra();
    const CorrClass x = g.sparse_corr(a, b, 0.6);
    const CorrClass y = g.sparse_corr(b, c, 0.6);
    if (tensor_is_zero(x, y) != compose(x, y).is_zero()) {
      return "criterion disagrees with product for " + x.to_string() + ", " + y.to_string();
    }
    return std::nullopt;
  });

  out.emplace_back("kernel universal property", [](InstanceGenerator& g) -> Failure {
    const FdAlgebra a = g.algebra(), b = g.algebra(), d = g.algebra();
    const CorrClass x = g.sparse_corr(a, b, 0.6);
    const Ideal k = left_kernel(x);
    const CorrClass w = clear_cols(g.corr_with_inf(d, a, 0.1), k);
    if (!compose(w, x).is_zero()) return "W(x)X != 0 for " + w.to_string();
    const CorrClass p = CorrClass(d, k.algebra(), w.matrix().select_cols(k.members()));
    const CorrClass inc = kernel(x);
    if (!(compose(p, inc) == w)) return "column restriction does not factor " + w.to_string();
    if (!(compose(w, dual(inc)) == p)) return "factorization not unique for " + w.to_string();
    return std::nullopt;
  });

  out.emplace_back("cokernel universal property", [](InstanceGenerator& g) -> Failure {
    const FdAlgebra a = g.algebra(), b = g.algebra(), d = g.algebra();
    const CorrClass x = g.sparse_corr(a, b, 0.6);
    const Ideal support = right_support(x);
    const CorrClass y = clear_rows(g.corr_with_inf(b, d, 0.1), Ideal(b, support.complement()));
    if (!compose(x, y).is_zero()) return "X(x)Y != 0 for " + y.to_string();
    const CorrClass q = cokernel(x);
    const CorrClass f = factor_through_quotient(y, support);
    if (!(compose(q, f) == y)) return "row restriction does not factor " + y.to_string();
    if (!(compose(dual(q), y) == f)) return "factorization not unique for " + y.to_string();
    return std::nullopt;
  });

  out.emplace_back("schubert identities", [](InstanceGenerator& g) -> Failure {
    const FdAlgebra a = g.algebra(true), b = g.algebra(true);
    const CorrClass x = g.sparse_corr(a, b, 0.5);
    if (!(schubert_image(x) == kernel(cokernel(x)))) return "image for " + x.to_string();
    if (!(schubert_coimage(x) == cokernel(kernel(x)))) return "coimage for " + x.to_string();
    if (!exact_at(x, cokernel(x)).exact) return "not exact at X -> coker for " + x.to_string();
    if (!exact_at(kernel(x), x).exact) return "not exact at ker -> X for " + x.to_string();
    return std::nullopt;
  });

  out.emplace_back("short exact theorem", [](InstanceGenerator& g) -> Failure {
    const FdAlgebra a = g.algebra(true), b = g.algebra(true), c = g.algebra(true);
    const CorrClass x = g.sparse_corr(a, b, 0.5);
    const CorrClass y = g.sparse_corr(b, c, 0.5);
    const ExactnessReport r = check_short_exact(x, y);
    if (!r.definition_agrees) {
      return "conditions disagree with nodes for " + x.to_string() + ", " + y.to_string();
    }
    return std::nullopt;
  });

  out.emplace_back("realize/classify roundtrip", [tol](InstanceGenerator& g) -> Failure {
    const FdAlgebra a = g.algebra(), b = g.algebra();
    const CorrClass k = g.corr(a, b);
    const auto rk = concrete::realize(k);
    if (!concrete::validate(rk, tol).ok()) return "realization invalid for " + k.to_string();
    if (!(concrete::classify(rk, tol) == k)) return "roundtrip fails for " + k.to_string();
    return std::nullopt;
  });

  out.emplace_back("oracle equivalence", [tol](InstanceGenerator& g) -> Failure {
    const FdAlgebra a = g.algebra(), b = g.algebra(), c = g.algebra();
    const CorrClass k = g.corr(a, b);
    const CorrClass l = g.corr(b, c);
    const auto t = concrete::interior_tensor(concrete::realize(k), concrete::realize(l), tol);
    if (!(concrete::classify(t.corr(), tol) == compose(k, l))) {
      return "numeric composite differs from K.L for " + k.to_string() + ", " + l.to_string();
    }
    const bool numeric_zero = t.norm() < 1e-9;
    if (numeric_zero != tensor_is_zero(k, l)) {
      return "zero detection disagrees for " + k.to_string() + ", " + l.to_string();
    }
    for (const auto& f : t.fibers()) {
      if (f.min_eigenvalue < -1e-9 * std::max(f.max_eigenvalue, 0.0) || f.pruned_residual > 1e-9) {
        return "Gram matrix not positive for " + k.to_string() + ", " + l.to_string();
      }
    }
    return std::nullopt;
  });

  out.emplace_back("balancing xb(x)y = x(x)by", [tol](InstanceGenerator& g) -> Failure {
    const FdAlgebra a = g.algebra(), b = g.algebra(), c = g.algebra();
    const CorrClass k = g.corr(a, b);
    const CorrClass l = g.corr(b, c);
    const auto rx = concrete::realize(k);
    const auto ry = concrete::realize(l);
    const auto t = concrete::interior_tensor(rx, ry, tol);
    std::mt19937_64 rng(g.below(1u << 30));
    std::normal_distribution<double> normal(0.0, 1.0);
    auto fill = [&](std::vector<concrete::Matrix>& blocks) {
      for (auto& m : blocks) {
        for (Eigen::Index e = 0; e < m.size(); ++e) {
          m.data()[e] = concrete::Complex(normal(rng), normal(rng)) / 2.0;
        }
      }
    };
    auto x = rx.module().zero();
    auto y = ry.module().zero();
    auto beta = concrete::zero_element(b);
    fill(x);
    fill(y);
    fill(beta.blocks);
    const auto lhs = t.coordinates(rx.module().right_act(x, beta), y);
    const auto rhs = t.coordinates(x, ry.left_act(beta, y));
    for (std::size_t j = 0; j < lhs.size(); ++j) {
      if (lhs[j].size() && (lhs[j] - rhs[j]).cwiseAbs().maxCoeff() > 1e-8) {
        return "balancing fails for " + k.to_string() + ", " + l.to_string();
      }
    }
    return std::nullopt;
  });

  out.emplace_back("dual tensor identities", [tol](InstanceGenerator& g) -> Failure {
    const FdAlgebra a = g.algebra(), b = g.algebra();
    const CorrClass k = partial_permutation(g, a, b);
    const auto rx = concrete::realize(k);
    const auto rd = concrete::dual_concrete(rx, tol);
    if (!(concrete::classify(rd, tol) == dual(k))) return "dual class for " + k.to_string();
    const auto left = concrete::classify(concrete::interior_tensor(rx, rd, tol).corr(), tol);
    const auto right = concrete::classify(concrete::interior_tensor(rd, rx, tol).corr(), tol);
    if (!(left == compose(k, dual(k))) || !(right == compose(dual(k), k))) {
      return "X(x)X~ or X~(x)X wrong for " + k.to_string();
    }
    // Diagonal A -> A (resp. B -> B) morphisms of the supports A_X and B_X.
    const CorrClass a_inc = ideal_inclusion_corr(Ideal(a, left_kernel(k).complement()));
    const CorrClass b_inc = ideal_inclusion_corr(right_support(k));
    const CorrClass a_diag = compose(dual(a_inc), a_inc);
    const CorrClass b_diag = compose(dual(b_inc), b_inc);
    if (!(left == a_diag) || !(right == b_diag)) {
      return "tensor with the dual is not the support diagonal for " + k.to_string();
    }
    return std::nullopt;
  });

  return out;
}

}  // namespace

bool RandomCheckReport::passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.failures == 0; });
}

std::string RandomCheckReport::transcript() const {
  std::ostringstream out;
  out << "random-check seed=" << options.seed << " count=" << options.count
      << " max-blocks=" << options.bounds.max_blocks << " max-dim=" << options.bounds.max_dim
      << " max-entry=" << options.bounds.max_entry << "\n";
  for (const auto& s : suites) {
    out << (s.failures == 0 ? "  pass " : "  FAIL ") << s.name << ": " << s.cases - s.failures
        << "/" << s.cases << "\n";
    for (const auto& f : s.samples) out << "       " << f << "\n";
  }
  return out.str();
}

RandomCheckReport random_check(const RandomCheckOptions& options) {
  RandomCheckReport report;
  report.options = options;
  std::uint64_t stream = 0;
  for (auto& [name, run] : suites(options)) {
    // splitmix64 step: independent stream per suite.
    std::uint64_t derived = options.seed + 0x9e3779b97f4a7c15ULL * ++stream;
    derived = (derived ^ (derived >> 30)) * 0xbf58476d1ce4e5b9ULL;
    derived = (derived ^ (derived >> 27)) * 0x94d049bb133111ebULL;
    derived ^= derived >> 31;
    InstanceGenerator gen(derived, options.bounds);

    SuiteResult result;
    result.name = name;
    for (std::size_t n = 0; n < options.count; ++n) {
      ++result.cases;
      Failure f;
      try {
        f = run(gen);
      } catch (const std::exception& e) {
        f = std::string("exception: ") + e.what();
      }
      if (f) {
        ++result.failures;
        if (result.samples.size() < kMaxSamples) result.samples.push_back(*f);
      }
    }
    report.suites.push_back(std::move(result));
  }
  return report;
}

}  // namespace enchilada
