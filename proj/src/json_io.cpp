#include "enchilada/json_io.hpp"

#include "enchilada/error.hpp"

namespace enchilada::io {

namespace {

const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object()) throw ValidationError(std::string(where) + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ValidationError(std::string(where) + ": missing field '" + key + "'");
  }
  return *it;
}

Json matrix_to_json(const concrete::Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const Cardinal& c) {
  if (c.is_inf()) return "inf";
  return c.value();
}

Json to_json(const FdAlgebra& a) { return Json{{"blocks", a.blocks()}}; }

Json to_json(const Ideal& i) {
  Json members = Json::array();
  for (std::size_t m : i.members()) members.push_back(m + 1);
  return Json{{"members", members}};
}

Json to_json(const CorrClass& x) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < x.matrix().rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < x.matrix().cols(); ++j) row.push_back(to_json(x.matrix()(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"source", to_json(x.source())}, {"target", to_json(x.target())}, {"matrix", rows}};
}

Json to_json(const SequenceSpec& s) {
  Json algebras = Json::array();
  for (const auto& a : s.algebras) algebras.push_back(to_json(a));
  Json corrs = Json::array();
  for (const auto& x : s.correspondences) corrs.push_back(to_json(x));
  return Json{{"algebras", algebras}, {"correspondences", corrs}};
}

Json to_json(const NodeVerdict& v) {
  return Json{{"node", v.node},
              {"exact", v.exact},
              {"image", to_json(v.image)},
              {"kernel", to_json(v.kernel)}};
}

Json to_json(const ExactnessReport& r) {
  Json nodes = Json::array();
  for (const auto& n : r.nodes) nodes.push_back(to_json(n));
  Json out{{"exact", r.exact}, {"nodes", nodes}, {"failures", r.failures()}};
  if (r.conditions) {
    out["conditions"] = Json{{kConditionInjective, r.conditions->phi_injective},
                             {kConditionSupport, r.conditions->support_is_kernel},
                             {kConditionFull, r.conditions->target_full}};
    out["definition_agrees"] = r.definition_agrees;
  }
  return out;
}

Json to_json(const RankProbe& p) {
  Json out{{"passes", p.passes}, {"rank", p.rank}, {"caveat", p.caveat}};
  if (p.witness) {
    out["witness"] = Json{{"g", to_json(p.witness->g)}, {"h", to_json(p.witness->h)}};
  }
  return out;
}

Json to_json(const GalleryTranscript& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(Json{{"description", s.description}, {"passed", s.passed}, {"note", s.note}});
  }
  return Json{{"name", t.name}, {"passed", t.passed()}, {"steps", steps}};
}

Json to_json(const concrete::ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"axiom", c.name},
                          {"max_violation", c.max_violation},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed()}});
  }
  return Json{{"ok", r.ok()}, {"checks", checks}};
}

Json to_json(const concrete::ConcreteCorr& x) {
  Json fibers = Json::array();
  const auto& dims = x.module().fiber_dims();
  for (std::size_t j = 0; j < dims.size(); ++j) {
    Json units = Json::array();
    for (std::size_t i = 0; i < x.source().block_count(); ++i) {
      Json block = Json::array();
      for (const auto& m : x.unit_images()[j][i]) block.push_back(matrix_to_json(m));
      units.push_back(std::move(block));
    }
    fibers.push_back(Json{{"dimension", dims[j]}, {"unit_images", units}});
  }
  return Json{{"source", to_json(x.source())}, {"target", to_json(x.target())},
              {"fibers", fibers}};
}

Cardinal cardinal_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInf;
    throw ValidationError("matrix entry: only the string \"inf\" is allowed, got " + j.dump());
  }
  if (j.is_number_unsigned()) return Cardinal{j.get<std::uint64_t>()};
  if (j.is_number_integer()) {
    throw ValidationError("matrix entry: negative multiplicity " + j.dump());
  }
  throw ValidationError("matrix entry: expected a natural number or \"inf\", got " + j.dump());
}

FdAlgebra algebra_from_json(const Json& j) {
  const Json& blocks = field(j, "blocks", "algebra");
  if (!blocks.is_array()) throw ValidationError("algebra: 'blocks' must be an array");
  std::vector<long long> sizes;
  for (const auto& b : blocks) {
    if (!b.is_number_integer()) {
      throw ValidationError("algebra: block size must be an integer, got " + b.dump());
    }
    sizes.push_back(b.get<long long>());
  }
  return make_algebra(sizes);
}

Ideal ideal_from_json(const Json& j, const FdAlgebra& parent) {
  const Json& members = field(j, "members", "ideal");
  if (!members.is_array()) throw ValidationError("ideal: 'members' must be an array");
  std::vector<std::size_t> zero_based;
  for (const auto& m : members) {
    if (!m.is_number_integer() || m.get<long long>() < 1) {
      throw ValidationError("ideal: members are 1-based positive integers, got " + m.dump());
    }
    zero_based.push_back(m.get<std::size_t>() - 1);
  }
  return Ideal(parent, std::move(zero_based));
}

CorrClass corr_from_json(const Json& j) {
  return corr_from_json(j, algebra_from_json(field(j, "source", "correspondence")),
                        algebra_from_json(field(j, "target", "correspondence")));
}

CorrClass corr_from_json(const Json& j, const FdAlgebra& source, const FdAlgebra& target) {
  if (j.is_object() && j.contains("source") && !(algebra_from_json(j["source"]) == source)) {
    throw EndpointMismatch("correspondence source does not match " + source.to_string());
  }
  if (j.is_object() && j.contains("target") && !(algebra_from_json(j["target"]) == target)) {
    throw EndpointMismatch("correspondence target does not match " + target.to_string());
  }
  const Json& rows = field(j, "matrix", "correspondence");
  if (!rows.is_array() || rows.size() != source.block_count()) {
    throw ValidationError("correspondence: matrix needs " + std::to_string(source.block_count()) +
                          " rows for source " + source.to_string());
  }
  CardinalMatrix m(source.block_count(), target.block_count());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != target.block_count()) {
      throw ValidationError("correspondence: row " + std::to_string(i + 1) + " needs " +
                            std::to_string(target.block_count()) + " entries for target " +
                            target.to_string());
    }
    for (std::size_t k = 0; k < rows[i].size(); ++k) m(i, k) = cardinal_from_json(rows[i][k]);
  }
  return CorrClass(source, target, std::move(m));
}

SequenceSpec sequence_from_json(const Json& j) {
  const Json& algebras = field(j, "algebras", "sequence");
  const Json& corrs = field(j, "correspondences", "sequence");
  if (!algebras.is_array() || !corrs.is_array()) {
    throw ValidationError("sequence: 'algebras' and 'correspondences' must be arrays");
  }
  if (algebras.size() != corrs.size() + 1) {
    throw EndpointMismatch("sequence: " + std::to_string(corrs.size()) + " correspondences need " +
                           std::to_string(corrs.size() + 1) + " algebras");
  }
  SequenceSpec s;
  for (const auto& a : algebras) s.algebras.push_back(algebra_from_json(a));
  for (std::size_t k = 0; k < corrs.size(); ++k) {
    s.correspondences.push_back(corr_from_json(corrs[k], s.algebras[k], s.algebras[k + 1]));
  }
  s.check_chain();
  return s;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace enchilada::io
