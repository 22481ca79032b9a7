#include "doctest.h"
#include "enchilada/error.hpp"
#include "enchilada/exactness.hpp"
#include "enchilada/gallery.hpp"
#include "support.hpp"

using namespace enchilada;
using enchilada::test::scalar_corr;
using enchilada::test::scalars;

TEST_CASE("exact_at compares image and kernel ideals") {
  const NodeVerdict v = exact_at(scalar_corr({{1, 0}}), scalar_corr({{0}, {1}}));
  CHECK(v.exact);
  CHECK(v.image.members() == std::vector<std::size_t>{0});
  CHECK(v.kernel.members() == std::vector<std::size_t>{0});
  CHECK_FALSE(exact_at(identity_corr(scalars(2)), scalar_corr({{0}, {1}})).exact);
  CHECK(exact_at(zero_corr(scalars(1), scalars(2)), identity_corr(scalars(2))).exact);
  CHECK_THROWS_AS(exact_at(scalar_corr({{1, 0}}), scalar_corr({{1}})), EndpointMismatch);
}

TEST_CASE("short exact sequences") {
  const ExactnessReport r = check_short_exact(scalar_corr({{1, 0}}), scalar_corr({{0}, {1}}));
  REQUIRE(r.conditions);
  CHECK(r.conditions->all());
  CHECK(r.exact);
  CHECK(r.definition_agrees);
  CHECK(r.failures().empty());

  const ExactnessReport broken = check_short_exact(scalar_corr({{1, 1}}), scalar_corr({{0}, {1}}));
  CHECK_FALSE(broken.exact);
  CHECK_FALSE(broken.conditions->support_is_kernel);
  CHECK(broken.failures() == std::vector<std::string>{kConditionSupport});
  CHECK(broken.definition_agrees);

  const ExactnessReport doubled = check_short_exact(scalar_corr({{1, 0}}), scalar_corr({{0}, {2}}));
  CHECK(doubled.exact);
}

TEST_CASE("check_sequence examines every interior node") {
  SequenceSpec padded{{FdAlgebra{}, scalars(1), scalars(2), scalars(1), FdAlgebra{}},
                      {zero_corr(FdAlgebra{}, scalars(1)), scalar_corr({{1, 0}}),
                       scalar_corr({{0}, {1}}), zero_corr(scalars(1), FdAlgebra{})}};
  const ExactnessReport r = check_sequence(padded);
  CHECK(r.exact);
  CHECK(r.nodes.size() == 3);

  // Length-4 chain broken only at the node between the second and third morphism.
  SequenceSpec chain{{scalars(1), scalars(2), scalars(1), scalars(2), scalars(1)},
                     {scalar_corr({{1, 0}}), scalar_corr({{0}, {1}}), scalar_corr({{1, 0}}),
                      scalar_corr({{0}, {1}})}};
  const ExactnessReport c = check_sequence(chain);
  CHECK_FALSE(c.exact);
  std::vector<std::size_t> bad;
  for (const auto& n : c.nodes) {
    if (!n.exact) bad.push_back(n.node);
  }
  CHECK(bad == std::vector<std::size_t>{2});

  SequenceSpec single{{scalars(1), scalars(2)}, {scalar_corr({{1, 1}})}};
  CHECK(check_sequence(single).exact);
  CHECK(check_sequence(single).nodes.empty());

  SequenceSpec mismatched{{scalars(1), scalars(2)}, {scalar_corr({{1}})}};
  CHECK_THROWS_AS(check_sequence(mismatched), EndpointMismatch);
}

TEST_CASE("short exact theorem matches the definition on all small pairs") {
  const auto algebras = enumerate_algebras(2, 2);
  std::size_t checked = 0;
  for (const auto& a : algebras) {
    for (const auto& b : algebras) {
      for (const auto& c : algebras) {
        for (const auto& x : enumerate_corrs(a, b, 1)) {
          for (const auto& y : enumerate_corrs(b, c, 1)) {
            const ExactnessReport r = check_short_exact(x, y);
            REQUIRE(r.definition_agrees);
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("gallery entries") {
  for (const auto& name : gallery_names()) {
    const GalleryTranscript t = gallery(name);
    CAPTURE(t.to_text());
    CHECK(t.name == name);
    CHECK_FALSE(t.steps.empty());
    CHECK(t.passed());
  }
  CHECK(gallery_names().size() == 7);
  CHECK_THROWS_AS(gallery("no_such_entry"), ValidationError);
}
