#include "enchilada/exactness.hpp"

#include "enchilada/error.hpp"

namespace enchilada {

void SequenceSpec::check_chain() const {
  if (algebras.size() != correspondences.size() + 1) {
    throw EndpointMismatch("a chain of " + std::to_string(correspondences.size()) +
                           " morphisms needs " + std::to_string(correspondences.size() + 1) +
                           " algebras");
  }
  for (std::size_t k = 0; k < correspondences.size(); ++k) {
    const auto& x = correspondences[k];
    if (!(x.source() == algebras[k]) || !(x.target() == algebras[k + 1])) {
      throw EndpointMismatch("morphism " + std::to_string(k + 1) + " is " + x.to_string() +
                             ", expected " + algebras[k].to_string() + " -> " +
                             algebras[k + 1].to_string());
    }
  }
}

std::vector<std::string> ExactnessReport::failures() const {
  std::vector<std::string> out;
  if (conditions) {
    if (!conditions->phi_injective) out.emplace_back(kConditionInjective);
    if (!conditions->support_is_kernel) out.emplace_back(kConditionSupport);
    if (!conditions->target_full) out.emplace_back(kConditionFull);
    return out;
  }
  for (const auto& n : nodes) {
    if (!n.exact) out.push_back("node " + std::to_string(n.node));
  }
  return out;
}

NodeVerdict exact_at(const CorrClass& x, const CorrClass& y) {
  if (!(x.target() == y.source())) {
    throw EndpointMismatch("exact_at: " + x.to_string() + " and " + y.to_string() +
                           " do not meet");
  }
  NodeVerdict v;
  v.image = right_support(x);
  v.kernel = left_kernel(y);
  v.exact = v.image == v.kernel;
  return v;
}

ExactnessReport check_short_exact(const CorrClass& x, const CorrClass& y) {
  if (!(x.target() == y.source())) {
    throw EndpointMismatch("check_short_exact: " + x.to_string() + " and " + y.to_string() +
                           " do not meet");
  }
  ExactnessReport report;
  ShortExactConditions c;
  c.phi_injective = phi_injective(x);
  c.support_is_kernel = right_support(x) == left_kernel(y);
  c.target_full = is_full(y);
  report.conditions = c;
  report.exact = c.all();

  const FdAlgebra zero;
  SequenceSpec padded{{zero, x.source(), x.target(), y.target(), zero},
                      {zero_corr(zero, x.source()), x, y, zero_corr(y.target(), zero)}};
  report.nodes = check_sequence(padded).nodes;
  const bool by_definition = report.nodes.size() == 3 && report.nodes[0].exact &&
                             report.nodes[1].exact && report.nodes[2].exact;
  report.definition_agrees = by_definition == report.exact;
  return report;
}

ExactnessReport check_sequence(const SequenceSpec& seq) {
  seq.check_chain();
  ExactnessReport report;
  report.exact = true;
  for (std::size_t k = 1; k + 1 < seq.algebras.size(); ++k) {
    NodeVerdict v = exact_at(seq.correspondences[k - 1], seq.correspondences[k]);
    v.node = k;
    report.exact = report.exact && v.exact;
    report.nodes.push_back(std::move(v));
  }
  return report;
}

}  // namespace enchilada
