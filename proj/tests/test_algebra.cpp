#include "doctest.h"
#include "enchilada/algebra.hpp"
#include "enchilada/cardinal.hpp"
#include "enchilada/error.hpp"
#include "enchilada/generate.hpp"

using namespace enchilada;

TEST_CASE("make_algebra builds block lists") {
  const FdAlgebra zero = make_algebra({});
  CHECK(zero.is_zero());
  CHECK(zero.dimension() == 0);
  CHECK(make_algebra({1, 1}).dimension() == 2);
  CHECK(make_algebra({2, 3}).dimension() == 13);
  CHECK(make_algebra({2, 3}).to_string() == "M2+M3");
  CHECK_THROWS_AS(make_algebra({1, 0}), ValidationError);
  CHECK_THROWS_AS(make_algebra({-2}), ValidationError);
}

TEST_CASE("quotient removes ideal blocks") {
  const FdAlgebra a{1, 1};
  CHECK(quotient(a, Ideal(a, {0})) == FdAlgebra{1});
  const FdAlgebra b{2, 3};
  CHECK(quotient(b, Ideal::zero(b)) == b);
  const FdAlgebra c{1, 2, 2};
  CHECK(quotient(c, Ideal(c, {1, 2})) == FdAlgebra{1});
  CHECK_THROWS_AS(quotient(a, Ideal(b, {0})), ValidationError);
}

TEST_CASE("ideal validation") {
  const FdAlgebra a{1, 2};
  CHECK_THROWS_AS(Ideal(a, {2}), ValidationError);
  CHECK_THROWS_AS(Ideal(a, {0, 0}), ValidationError);
  const Ideal i(a, {1});
  CHECK(i.contains(1));
  CHECK_FALSE(i.contains(0));
  CHECK(i.algebra() == FdAlgebra{2});
  CHECK(i.complement() == std::vector<std::size_t>{0});
  CHECK(i.subset_of(Ideal::full(a)));
  CHECK_FALSE(Ideal::full(a).subset_of(i));
}

TEST_CASE("algebras_isomorphic compares block multisets") {
  CHECK(algebras_isomorphic(FdAlgebra{1, 2}, FdAlgebra{2, 1}));
  CHECK_FALSE(algebras_isomorphic(FdAlgebra{1, 1}, FdAlgebra{2}));
  CHECK(algebras_isomorphic(FdAlgebra{}, FdAlgebra{}));
}

TEST_CASE("quotient invariants on every ideal") {
  for (const auto& a : enumerate_algebras(3, 3)) {
    CHECK(quotient(a, Ideal::zero(a)) == a);
    CHECK(quotient(a, Ideal::full(a)).is_zero());
    for (std::size_t mask = 0; mask < (std::size_t{1} << a.block_count()); ++mask) {
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < a.block_count(); ++k) {
        if (mask >> k & 1) members.push_back(k);
      }
      const Ideal i(a, members);
      CHECK(quotient(a, i).dimension() + i.algebra().dimension() == a.dimension());
    }
  }
}

TEST_CASE("cardinal arithmetic") {
  CHECK(Cardinal(2) + Cardinal(3) == Cardinal(5));
  CHECK(Cardinal(2) * Cardinal(3) == Cardinal(6));
  CHECK(kInf + Cardinal(1) == kInf);
  CHECK(kInf * Cardinal(0) == Cardinal(0));
  CHECK(Cardinal(0) * kInf == Cardinal(0));
  CHECK(kInf * Cardinal(3) == kInf);
  CHECK(Cardinal(7) < kInf);
  CHECK(kInf.to_string() == "inf");
  CHECK_THROWS(kInf.value());
  CHECK_THROWS(Cardinal(UINT64_MAX) + Cardinal(1));
  CHECK_THROWS(Cardinal(UINT64_MAX) * Cardinal(2));
}

TEST_CASE("cardinal matrices") {
  const CardinalMatrix m{{1, kInf}, {0, 2}};
  CHECK(m.has_inf());
  CHECK(m.row_sum(0) == kInf);
  CHECK(m.col_sum(0) == Cardinal(1));
  CHECK(m.transpose() == CardinalMatrix{{1, 0}, {kInf, 2}});
  CHECK(m.to_string() == "[[1,inf],[0,2]]");
  // A zero column meeting an infinite entry contributes nothing.
  const CardinalMatrix zero_col{{kInf, 0}};
  const CardinalMatrix picks{{0}, {1}};
  CHECK((zero_col * picks) == CardinalMatrix{{0}});
  CHECK((CardinalMatrix(2, 0) * CardinalMatrix(0, 3)) == CardinalMatrix(2, 3));
  CHECK_THROWS(CardinalMatrix(1, 2) * CardinalMatrix(1, 2));
}
