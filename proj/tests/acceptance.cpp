// Acceptance criteria runner. Prints one PASS/FAIL line per criterion.
// Usage: acceptance [criterion-number ...]   (no arguments runs all)

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "enchilada/concrete.hpp"
#include "enchilada/corr.hpp"
#include "enchilada/exactness.hpp"
#include "enchilada/gallery.hpp"
#include "enchilada/generate.hpp"

using namespace enchilada;

namespace {

constexpr double kMultiplicityTolerance = 1e-6;
constexpr double kZeroNorm = 1e-9;
constexpr std::uint64_t kSeed = 42;

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Verdict()> run;
};

std::string show(const CorrClass& x) { return x.to_string(); }

// Selection matrices (one 1 per row, distinct columns) determine P from P*K.
bool is_row_selection(const CardinalMatrix& k) {
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    std::size_t ones = 0, col = 0;
    for (std::size_t j = 0; j < k.cols(); ++j) {
      if (k(i, j) == Cardinal(1)) {
        ++ones;
        col = j;
      } else if (!k(i, j).is_zero()) {
        return false;
      }
    }
    if (ones != 1 || !seen.insert(col).second) return false;
  }
  return true;
}

Verdict oracle_equivalence() {
  concrete::Tolerances tol;
  tol.multiplicity = kMultiplicityTolerance;
  InstanceGenerator gen(kSeed, Bounds{3, 3, 2});
  for (int n = 0; n < 200; ++n) {
    const FdAlgebra a = gen.algebra();
    const FdAlgebra b = gen.algebra();
    const FdAlgebra c = gen.algebra();
    const CorrClass k = gen.corr(a, b);
    const CorrClass l = gen.corr(b, c);
    const auto t = concrete::interior_tensor(concrete::realize(k), concrete::realize(l), tol);
    const CorrClass numeric = concrete::classify(t.corr(), tol);
    if (numeric != compose(k, l)) {
      return {false, "case " + std::to_string(n) + ": K=" + show(k) + " L=" + show(l) +
                         " numeric " + numeric.matrix().to_string()};
    }
  }
  return {true, "200 pairs"};
}

Verdict categorical_laws() {
  InstanceGenerator gen(kSeed, Bounds{3, 3, 2});
  std::size_t with_inf = 0;
  for (int n = 0; n < 500; ++n) {
    const FdAlgebra a = gen.algebra(true);
    const FdAlgebra b = gen.algebra(true);
    const FdAlgebra c = gen.algebra(true);
    const FdAlgebra d = gen.algebra(true);
    const CorrClass x = gen.corr_with_inf(a, b, 0.2);
    const CorrClass y = gen.corr_with_inf(b, c, 0.2);
    const CorrClass z = gen.corr_with_inf(c, d, 0.2);
    if (x.matrix().has_inf() || y.matrix().has_inf() || z.matrix().has_inf()) ++with_inf;
    if (compose(compose(x, y), z) != compose(x, compose(y, z))) {
      return {false, "associativity fails at " + show(x) + " " + show(y) + " " + show(z)};
    }
    if (compose(identity_corr(a), x) != x || compose(x, identity_corr(b)) != x) {
      return {false, "unit law fails at " + show(x)};
    }
  }
  return {true, "500 triples, " + std::to_string(with_inf) + " with inf"};
}

Verdict universal_properties() {
  InstanceGenerator gen(kSeed, Bounds{3, 3, 2});
  for (int n = 0; n < 100; ++n) {
    const FdAlgebra a = gen.algebra();
    const FdAlgebra b = gen.algebra();
    const FdAlgebra d = gen.algebra();
    const CorrClass x = gen.sparse_corr(a, b, 0.5);

    // Kernel side: W: D -> A with W*X = 0.
    const Ideal lk = left_kernel(x);
    CardinalMatrix wm = gen.corr(d, a).matrix();
    for (std::size_t i = 0; i < wm.rows(); ++i) {
      for (std::size_t j = 0; j < wm.cols(); ++j) {
        if (!lk.contains(j)) wm(i, j) = 0;
      }
    }
    const CorrClass w(d, a, wm);
    const CorrClass k = kernel(x);
    const CorrClass p(d, k.source(), wm.select_cols(lk.members()));
    if (!compose(w, x).is_zero() || compose(p, k) != w || !is_row_selection(k.matrix())) {
      return {false, "kernel factorization fails for X=" + show(x) + " W=" + show(w)};
    }

    // Cokernel side: V: B -> D with X*V = 0.
    const Ideal bx = right_support(x);
    CardinalMatrix vm = gen.corr(b, d).matrix();
    for (std::size_t i = 0; i < vm.rows(); ++i) {
      for (std::size_t j = 0; j < vm.cols(); ++j) {
        if (bx.contains(i)) vm(i, j) = 0;
      }
    }
    const CorrClass v(b, d, vm);
    const CorrClass c = cokernel(x);
    const CorrClass q(c.target(), d, vm.select_rows(bx.complement()));
    if (!compose(x, v).is_zero() || compose(c, q) != v ||
        !is_row_selection(c.matrix().transpose())) {
      return {false, "cokernel factorization fails for X=" + show(x) + " V=" + show(v)};
    }
  }
  return {true, "100 instances"};
}

Verdict schubert_identities() {
  InstanceGenerator gen(kSeed, Bounds{3, 3, 2});
  for (int n = 0; n < 200; ++n) {
    const FdAlgebra a = gen.algebra(true);
    const FdAlgebra b = gen.algebra(true);
    const CorrClass x = gen.sparse_corr(a, b, 0.4);
    if (schubert_image(x) != kernel(cokernel(x))) return {false, "image at " + show(x)};
    if (schubert_coimage(x) != cokernel(kernel(x))) return {false, "coimage at " + show(x)};
    if (!exact_at(kernel(x), x).exact) return {false, "exact_at(kernel(X), X) at " + show(x)};
    if (!exact_at(x, cokernel(x)).exact) return {false, "exact_at(X, cokernel(X)) at " + show(x)};
  }
  return {true, "200 morphisms"};
}

Verdict short_exact_theorem() {
  const auto algebras = enumerate_algebras(2, 2);
  std::size_t pairs = 0, exact = 0;
  for (const auto& a : algebras) {
    for (const auto& b : algebras) {
      for (const auto& c : algebras) {
        for (const auto& x : enumerate_corrs(a, b, 1)) {
          for (const auto& y : enumerate_corrs(b, c, 1)) {
            const ExactnessReport r = check_short_exact(x, y);
            ++pairs;
            if (r.exact) ++exact;
            if (!r.definition_agrees) {
              return {false, "disagreement at X=" + show(x) + " Y=" + show(y)};
            }
          }
        }
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs, " + std::to_string(exact) +
                    " exact, 0 disagreements"};
}

Verdict split_mono_characterization() {
  const auto algebras = enumerate_algebras(2, 2);
  std::size_t morphisms = 0, split = 0, mismatches = 0;
  std::string first;
  for (const auto& a : algebras) {
    for (const auto& b : algebras) {
      for (const auto& x : enumerate_corrs(a, b, 1)) {
        ++morphisms;
        const CorrClass id = identity_corr(a);
        bool found = false;
        std::string witness;
        for (const auto& m : enumerate_corrs(b, a, 3)) {
          if (compose(x, m) == id) {
            found = true;
            witness = m.matrix().to_string();
            break;
          }
        }
        const bool predicate = is_split_mono(x);
        if (predicate) {
          ++split;
          if (compose(x, dual(x)) != id) {
            return {false, "dual(X) is not a right inverse for X=" + show(x)};
          }
        }
        if (predicate != found) {
          if (mismatches++ == 0) {
            first = "X=" + show(x) + " is_split_mono=" + (predicate ? "true" : "false") +
                    (found ? " but compose(X,M)=1 for M=" + witness : " but no M found");
          }
        }
      }
    }
  }
  // Necessity over entries <= 2: non-split X should admit no right inverse with entries <= 3.
  std::size_t unexpected = 0;
  for (const auto& a : algebras) {
    for (const auto& b : algebras) {
      for (const auto& x : enumerate_corrs(a, b, 2)) {
        if (is_split_mono(x)) continue;
        for (const auto& m : enumerate_corrs(b, a, 3)) {
          if (compose(x, m) == identity_corr(a)) {
            ++unexpected;
            break;
          }
        }
      }
    }
  }
  const std::string counts = std::to_string(morphisms) + " morphisms, " + std::to_string(split) +
                             " split by predicate, " + std::to_string(mismatches) +
                             " mismatches, " + std::to_string(unexpected) +
                             " right-invertible non-split morphisms with entries <= 2";
  if (mismatches > 0 || unexpected > 0) return {false, counts + "; first: " + first};
  return {true, counts};
}

Verdict zero_tensor() {
  InstanceGenerator gen(kSeed, Bounds{3, 3, 2});
  std::size_t zeros = 0;
  for (int n = 0; n < 100; ++n) {
    const FdAlgebra a = gen.algebra();
    const FdAlgebra b = gen.algebra();
    const FdAlgebra c = gen.algebra();
    const CorrClass x = gen.sparse_corr(a, b, 0.6);
    const CorrClass y = gen.sparse_corr(b, c, 0.6);
    const bool symbolic = tensor_is_zero(x, y);
    const bool numeric =
        concrete::interior_tensor(concrete::realize(x), concrete::realize(y)).norm() < kZeroNorm;
    const bool product = compose(x, y).is_zero();
    if (symbolic != numeric || numeric != product) {
      return {false, "X=" + show(x) + " Y=" + show(y)};
    }
    if (symbolic) ++zeros;
  }
  return {true, "100 pairs, " + std::to_string(zeros) + " zero tensors"};
}

Verdict gallery_entries() {
  for (const char* name : {"sur_not_epi", "noncancellative_sum", "mono_necessity"}) {
    const GalleryTranscript t = gallery(name);
    if (!t.passed()) {
      for (const auto& s : t.steps) {
        if (!s.passed) return {false, std::string(name) + ": " + s.description};
      }
    }
  }
  // Every X with nonzero left kernel is annihilated by a nonzero W.
  const auto algebras = enumerate_algebras(2, 2);
  std::size_t witnessed = 0;
  for (const auto& a : algebras) {
    for (const auto& b : algebras) {
      for (const auto& x : enumerate_corrs(a, b, 1)) {
        const Ideal k = left_kernel(x);
        if (k.empty()) continue;
        const CorrClass w = ideal_inclusion_corr(k);
        if (w.is_zero() || !compose(w, x).is_zero()) return {false, "no witness for " + show(x)};
        ++witnessed;
      }
    }
  }
  return {true, "3 entries, " + std::to_string(witnessed) + " annihilator witnesses"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", 60.0, oracle_equivalence},
      {2, "categorical laws", 5.0, categorical_laws},
      {3, "kernel/cokernel universal properties", 10.0, universal_properties},
      {4, "Schubert identities", 5.0, schubert_identities},
      {5, "short exact theorem equivalence", 60.0, short_exact_theorem},
      {6, "split-mono characterization", 120.0, split_mono_characterization},
      {7, "zero tensor criterion", 30.0, zero_tensor},
      {8, "gallery", 5.0, gallery_entries},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      v.pass = false;
      v.detail += "; over time limit";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", seconds, c.limit_seconds);
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << " ("
              << timing << "): " << v.detail << std::endl;
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
