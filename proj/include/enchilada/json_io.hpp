#pragma once

// JSON surface shared by the CLI and the tests.
//
//   algebra:        {"blocks": [n1, ..., nr]}
//   ideal:          {"members": [i, ...]}              (1-based)
//   correspondence: {"source": algebra, "target": algebra,
//                    "matrix": [[1, "inf"], [0, 2]]}   (row-major)
//   sequence:       {"algebras": [...], "correspondences": [...]}
//
// Inside a sequence a correspondence may omit source/target; they are then
// taken from the surrounding algebras.

#include "json.hpp"

#include "enchilada/algebra.hpp"
#include "enchilada/cardinal.hpp"
#include "enchilada/concrete.hpp"
#include "enchilada/corr.hpp"
#include "enchilada/exactness.hpp"
#include "enchilada/gallery.hpp"

namespace enchilada::io {

using Json = nlohmann::json;

Json to_json(const Cardinal& c);
Json to_json(const FdAlgebra& a);
Json to_json(const Ideal& i);
Json to_json(const CorrClass& x);
Json to_json(const SequenceSpec& s);
Json to_json(const NodeVerdict& v);
Json to_json(const ExactnessReport& r);
Json to_json(const RankProbe& p);
Json to_json(const GalleryTranscript& t);
Json to_json(const concrete::ValidationReport& r);
/// Debug dump: fiber dimensions and unit images as row-major [re, im] pairs.
Json to_json(const concrete::ConcreteCorr& x);

// Parsers throw ValidationError with a short path to the offending value.
Cardinal cardinal_from_json(const Json& j);
FdAlgebra algebra_from_json(const Json& j);
Ideal ideal_from_json(const Json& j, const FdAlgebra& parent);
CorrClass corr_from_json(const Json& j);
CorrClass corr_from_json(const Json& j, const FdAlgebra& source, const FdAlgebra& target);
SequenceSpec sequence_from_json(const Json& j);

/// Parses text, mapping syntax errors to ValidationError.
Json parse(const std::string& text);

}  // namespace enchilada::io
