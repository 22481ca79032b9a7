#include "doctest.h"
#include "enchilada/corr.hpp"
#include "enchilada/error.hpp"
#include "support.hpp"

using namespace enchilada;
using enchilada::test::scalar_corr;
using enchilada::test::scalars;

TEST_CASE("identity and composition") {
  CHECK(identity_corr(FdAlgebra{1, 1}).matrix() == CardinalMatrix{{1, 0}, {0, 1}});
  CHECK(identity_corr(FdAlgebra{}).matrix() == CardinalMatrix(0, 0));
  CHECK(identity_corr(FdAlgebra{3}).matrix() == CardinalMatrix{{1}});

  const CorrClass x = scalar_corr({{1, 1}});
  const CorrClass y = scalar_corr({{1}, {0}});
  CHECK(compose(x, y).matrix() == CardinalMatrix{{1}});
  CHECK(compose(identity_corr(x.source()), x) == x);
  CHECK(compose(scalar_corr({{2}}), scalar_corr({{3}})).matrix() == CardinalMatrix{{6}});
  CHECK_THROWS_AS(compose(x, x), EndpointMismatch);
  CHECK_THROWS_AS(CorrClass(scalars(1), scalars(2), CardinalMatrix{{1}}), ValidationError);
}

TEST_CASE("direct sums are not cancellative") {
  CHECK(direct_sum(scalar_corr({{1}}), scalar_corr({{2}})).matrix() == CardinalMatrix{{3}});
  const CorrClass a = direct_sum(scalar_corr({{kInf}}), scalar_corr({{1}}));
  const CorrClass b = direct_sum(scalar_corr({{kInf}}), scalar_corr({{2}}));
  CHECK(a.matrix() == CardinalMatrix{{kInf}});
  CHECK(a == b);
  CHECK_THROWS_AS(direct_sum(scalar_corr({{1}}), scalar_corr({{1, 0}})), EndpointMismatch);
}

TEST_CASE("supports, kernels and fullness") {
  CHECK(right_support(scalar_corr({{1, 0}})).members() == std::vector<std::size_t>{0});
  CHECK(right_support(scalar_corr({{0, 0}})).empty());
  CHECK(right_support(scalar_corr({{1}, {1}})).members() == std::vector<std::size_t>{0});
  CHECK(left_kernel(scalar_corr({{1}, {0}})).members() == std::vector<std::size_t>{1});
  CHECK(left_kernel(identity_corr(scalars(2))).empty());
  CHECK(left_kernel(scalar_corr({{0}})).members() == std::vector<std::size_t>{0});

  CHECK(is_full(scalar_corr({{1, 1}})));
  CHECK(phi_injective(scalar_corr({{1, 1}})));
  CHECK(is_full(scalar_corr({{1}, {0}})));
  CHECK_FALSE(phi_injective(scalar_corr({{1}, {0}})));
  CHECK_FALSE(is_full(scalar_corr({{1, 0}})));
  CHECK(phi_injective(scalar_corr({{1, 0}})));
}

TEST_CASE("tensor_is_zero") {
  CHECK(tensor_is_zero(scalar_corr({{1, 0}}), scalar_corr({{0}, {1}})));
  CHECK_FALSE(tensor_is_zero(identity_corr(scalars(2)), scalar_corr({{0}, {1}})));
}

TEST_CASE("ideal inclusions and quotient maps") {
  const FdAlgebra a = scalars(2);
  CHECK(ideal_inclusion_corr(Ideal(a, {1})).matrix() == CardinalMatrix{{0, 1}});
  CHECK(ideal_inclusion_corr(Ideal::zero(a)).matrix() == CardinalMatrix(0, 2));
  CHECK(ideal_inclusion_corr(Ideal::full(a)) == identity_corr(a));
  CHECK(quotient_corr(a, Ideal(a, {0})).matrix() == CardinalMatrix{{0}, {1}});
  CHECK(quotient_corr(a, Ideal::zero(a)) == identity_corr(a));
  CHECK(quotient_corr(a, Ideal::full(a)).matrix() == CardinalMatrix(2, 0));
}

TEST_CASE("kernels and cokernels") {
  const CorrClass k = kernel(scalar_corr({{1}, {0}}));
  CHECK(k.source() == scalars(1));
  CHECK(k.matrix() == CardinalMatrix{{0, 1}});
  CHECK(kernel(identity_corr(scalars(2))).source().is_zero());
  const CorrClass zero = zero_corr(FdAlgebra{2, 1}, FdAlgebra{3});
  CHECK(kernel(zero) == identity_corr(zero.source()));

  CHECK(cokernel(scalar_corr({{1, 0}})).matrix() == CardinalMatrix{{0}, {1}});
  const CorrClass full = scalar_corr({{1, 1}});
  CHECK(cokernel(full).target().is_zero());
  CHECK(cokernel(full).matrix() == CardinalMatrix(2, 0));
  CHECK(cokernel(zero) == identity_corr(zero.target()));
}

TEST_CASE("Schubert image and coimage") {
  CHECK(schubert_image(scalar_corr({{1, 0}})).matrix() == CardinalMatrix{{1, 0}});
  CHECK(schubert_image(zero_corr(scalars(1), scalars(2))).source().is_zero());
  CHECK(schubert_image(scalar_corr({{1, 1}})) == identity_corr(scalars(2)));
  CHECK(schubert_coimage(scalar_corr({{1}, {0}})) == quotient_corr(scalars(2), Ideal(scalars(2), {1})));
  CHECK(schubert_coimage(scalar_corr({{1}, {0}})).matrix() == CardinalMatrix{{1}, {0}});
  CHECK(schubert_coimage(scalar_corr({{1, 1}})) == identity_corr(scalars(1)));
  CHECK(schubert_coimage(zero_corr(scalars(1), scalars(2))).matrix() == CardinalMatrix(1, 0));
}

TEST_CASE("Hilbert bimodule and split predicates") {
  CHECK(is_hilbert_bimodule(scalar_corr({{0, 1, 0}})));
  CHECK_FALSE(is_hilbert_bimodule(scalar_corr({{1, 1}})));
  CHECK_FALSE(is_hilbert_bimodule(scalar_corr({{2}})));

  const CorrClass x = scalar_corr({{0, 1, 0}});
  CHECK(is_split_mono(x));
  CHECK(compose(x, dual(x)) == identity_corr(x.source()));
  CHECK_FALSE(is_split_mono(scalar_corr({{1, 1}})));
  CHECK(is_split_mono(identity_corr(FdAlgebra{2, 3})));

  CHECK(is_split_epi(scalar_corr({{0}, {1}, {0}})));
  CHECK_FALSE(is_split_epi(scalar_corr({{1, 0}})));
  CHECK(is_split_epi(identity_corr(FdAlgebra{2})));

  CHECK(is_invertible(scalar_corr({{0, 1}, {1, 0}})));
  CHECK_FALSE(is_invertible(scalar_corr({{1, 0}})));
  CHECK(is_invertible(CorrClass(FdAlgebra{2}, FdAlgebra{3}, CardinalMatrix{{1}})));
}

TEST_CASE("dual of a Hilbert bimodule") {
  const CorrClass x = scalar_corr({{0, 1, 0}});
  const CorrClass d = dual(x);
  CHECK(d.matrix() == CardinalMatrix{{0}, {1}, {0}});
  CHECK(compose(x, d) == identity_corr(x.source()));
  CHECK(compose(d, x).matrix() == CardinalMatrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  CHECK(dual(identity_corr(FdAlgebra{2, 1})) == identity_corr(FdAlgebra{2, 1}));

  const CorrClass p = scalar_corr({{1, 0}, {0, 0}});
  CHECK(dual(p) == p);
  CHECK(compose(p, dual(p)) == p);
  CHECK(compose(dual(p), p) == p);
  CHECK_THROWS_AS(dual(scalar_corr({{1, 1}})), ValidationError);
}

TEST_CASE("restriction and factorization") {
  const CorrClass x = scalar_corr({{1, 0}});
  CHECK(restrict_right(x, Ideal(x.target(), {0})).matrix() == CardinalMatrix{{1}});
  CHECK(restrict_right(x, Ideal::full(x.target())) == x);
  const CorrClass y = scalar_corr({{2, 0}, {1, 0}});
  const Ideal c(y.target(), {0});
  const CorrClass r = restrict_right(y, c);
  CHECK(r.matrix() == CardinalMatrix{{2}, {1}});
  CHECK(compose(r, ideal_inclusion_corr(c)) == y);
  CHECK_THROWS_AS(restrict_right(y, Ideal(y.target(), {1})), ValidationError);

  const CorrClass z = scalar_corr({{1}, {0}});
  CHECK(factor_through_quotient(z, Ideal(z.source(), {1})).matrix() == CardinalMatrix{{1}});
  CHECK(factor_through_quotient(z, Ideal::zero(z.source())) == z);
  const CorrClass w = scalar_corr({{0}, {1}, {0}});
  const Ideal i(w.source(), {0});
  const CorrClass f = factor_through_quotient(w, i);
  CHECK(f.matrix() == CardinalMatrix{{1}, {0}});
  CHECK(compose(quotient_corr(w.source(), i), f) == w);
  CHECK_THROWS_AS(factor_through_quotient(w, Ideal(w.source(), {1})), ValidationError);
}

namespace {

// Exhaustive search for G != H: D -> A with GX = HX, entries <= bound, D with <= 2 blocks.
bool has_left_cancellation_failure(const CorrClass& x, std::uint64_t bound) {
  for (std::size_t k = 1; k <= 2; ++k) {
    const auto gs = enumerate_corrs(scalars(k), x.source(), bound);
    for (std::size_t p = 0; p < gs.size(); ++p) {
      for (std::size_t q = p + 1; q < gs.size(); ++q) {
        if (compose(gs[p], x) == compose(gs[q], x)) return true;
      }
    }
  }
  return false;
}

bool has_right_cancellation_failure(const CorrClass& x, std::uint64_t bound) {
  for (std::size_t k = 1; k <= 2; ++k) {
    const auto gs = enumerate_corrs(x.target(), scalars(k), bound);
    for (std::size_t p = 0; p < gs.size(); ++p) {
      for (std::size_t q = p + 1; q < gs.size(); ++q) {
        if (compose(x, gs[p]) == compose(x, gs[q])) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("finite rank probes") {
  const RankProbe row = mono_finite_rank_test(scalar_corr({{1, 1}}));
  CHECK(row.passes);
  CHECK_FALSE(row.caveat.empty());
  CHECK_FALSE(has_left_cancellation_failure(scalar_corr({{1, 1}}), 2));

  const RankProbe col = mono_finite_rank_test(scalar_corr({{1}, {1}}));
  CHECK_FALSE(col.passes);
  REQUIRE(col.witness);
  CHECK(col.witness->g.matrix() == CardinalMatrix{{1, 0}});
  CHECK(col.witness->h.matrix() == CardinalMatrix{{0, 1}});
  CHECK(compose(col.witness->g, scalar_corr({{1}, {1}})) ==
        compose(col.witness->h, scalar_corr({{1}, {1}})));
  CHECK(has_left_cancellation_failure(scalar_corr({{1}, {1}}), 2));

  CHECK(mono_finite_rank_test(identity_corr(scalars(3))).passes);

  CHECK_FALSE(epi_finite_rank_test(scalar_corr({{1, 1}})).passes);
  CHECK(epi_finite_rank_test(quotient_corr(scalars(2), Ideal(scalars(2), {0}))).passes);
  CHECK_FALSE(epi_finite_rank_test(scalar_corr({{1, 0}})).passes);
  CHECK_THROWS_AS(mono_finite_rank_test(scalar_corr({{kInf}})), ValidationError);
}

TEST_CASE("rank probes agree with bounded cancellation search") {
  test::for_each_corr(2, 1, 2, [](const CorrClass& x) {
    if (x.source().is_zero() || x.target().is_zero()) return;
    CAPTURE(x.to_string());
    CHECK(mono_finite_rank_test(x).passes == !has_left_cancellation_failure(x, 2));
    CHECK(epi_finite_rank_test(x).passes == !has_right_cancellation_failure(x, 2));
  });
}

TEST_CASE("injective action on C2 that still fails the mono probe") {
  const CorrClass x = scalar_corr({{1, 1}, {1, 1}});
  CHECK(phi_injective(x));
  CHECK_FALSE(mono_finite_rank_test(x).passes);
  CHECK(compose(scalar_corr({{1, 0}}), x) == compose(scalar_corr({{0, 1}}), x));
}

TEST_CASE("right inverses exist exactly for rows with a private unit column") {
  test::for_each_corr(2, 2, 1, [](const CorrClass& x) {
    CAPTURE(x.to_string());
    const auto found = test::search_right_inverse(x, 3);
    const auto built = right_inverse(x);
    CHECK(found.has_value() == built.has_value());
    if (built) CHECK(compose(x, *built) == identity_corr(x.source()));
  });
  // Split in the category, yet not a Hilbert bimodule.
  const CorrClass diag = scalar_corr({{1, 1}});
  CHECK_FALSE(is_split_mono(diag));
  CHECK(compose(diag, scalar_corr({{1}, {0}})) == identity_corr(scalars(1)));
}
