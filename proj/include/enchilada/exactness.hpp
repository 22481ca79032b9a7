#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enchilada/algebra.hpp"
#include "enchilada/corr.hpp"

namespace enchilada {

/// A chain A_0 -X_1-> A_1 -> ... -X_n-> A_n.
struct SequenceSpec {
  std::vector<FdAlgebra> algebras;
  std::vector<CorrClass> correspondences;

  /// Throws EndpointMismatch unless X_k : A_{k-1} -> A_k for every k.
  void check_chain() const;
};

/// Verdict at one node: image of the incoming morphism versus kernel of the
/// outgoing one, both as ideals of the node algebra.
struct NodeVerdict {
  std::size_t node = 0;  // index into SequenceSpec::algebras
  bool exact = false;
  Ideal image;   // right support of the incoming morphism
  Ideal kernel;  // left kernel of the outgoing morphism
};

/// The three conditions characterizing exactness of 0 -> A -> B -> C -> 0.
struct ShortExactConditions {
  bool phi_injective = false;      // phi_X injective (exactness at A)
  bool support_is_kernel = false;  // B_X = ker phi_Y (exactness at B)
  bool target_full = false;        // Y full (exactness at C)

  bool all() const { return phi_injective && support_is_kernel && target_full; }
};

struct ExactnessReport {
  std::vector<NodeVerdict> nodes;
  std::optional<ShortExactConditions> conditions;
  bool exact = false;
  /// Short sequences only: the three-condition verdict matches the node
  /// verdicts.
  bool definition_agrees = true;

  /// Names of failing conditions (short sequences) or failing node indices.
  std::vector<std::string> failures() const;
};

NodeVerdict exact_at(const CorrClass& x, const CorrClass& y);

/// Exactness of 0 -> A -X-> B -Y-> C -> 0. The verdict is the conjunction of
/// the three conditions; `nodes` holds the definition-level verdicts at A, B
/// and C computed with explicit zero morphisms at the ends.
ExactnessReport check_short_exact(const CorrClass& x, const CorrClass& y);

/// Checks every interior node of the chain; a single morphism is vacuously
/// exact.
ExactnessReport check_sequence(const SequenceSpec& seq);

inline constexpr const char* kConditionInjective = "φ_X injective";
inline constexpr const char* kConditionSupport = "B_X = ker φ_Y";
inline constexpr const char* kConditionFull = "Y full";

}  // namespace enchilada
