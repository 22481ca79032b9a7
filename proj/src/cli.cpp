#include "enchilada/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "enchilada/concrete.hpp"
#include "enchilada/corr.hpp"
#include "enchilada/error.hpp"
#include "enchilada/exactness.hpp"
#include "enchilada/gallery.hpp"
#include "enchilada/json_io.hpp"
#include "enchilada/random_check.hpp"

namespace enchilada::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  std::uint64_t seed = 42;
  std::size_t count = 200;
  std::size_t max_blocks = 3;
  std::size_t max_dim = 3;
  std::uint64_t max_entry = 2;
  std::optional<double> tolerance;
  bool json_only = false;
  std::string gallery_name;
};

// A finished command: JSON report, summary lines, exit code.
struct Outcome {
  Json report;
  std::vector<std::string> summary;
  int code = kExitOk;
};

Json load_input(const std::string& input) {
  if (input.empty()) throw ValidationError("--input is required (a file path or inline JSON)");
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (input[first] == '{' || input[first] == '[')) {
    return io::parse(input);
  }
  std::ifstream file(input);
  if (!file) throw ValidationError("cannot open input file '" + input + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return io::parse(buf.str());
}

std::pair<CorrClass, CorrClass> load_pair(const Json& j) {
  if (!j.is_object() || !j.contains("first") || !j.contains("second")) {
    throw ValidationError("expected {\"first\": correspondence, \"second\": correspondence}");
  }
  return {io::corr_from_json(j["first"]), io::corr_from_json(j["second"])};
}

concrete::Tolerances tolerances(const Options& o) {
  concrete::Tolerances t;
  if (o.tolerance) {
    if (!(*o.tolerance > 0.0)) throw ValidationError("--tolerance must be positive");
    t.null_relative = *o.tolerance;
  }
  return t;
}

Outcome do_compose(const Options& o) {
  const auto [x, y] = load_pair(load_input(o.input));
  const CorrClass xy = compose(x, y);
  return {Json{{"result", io::to_json(xy)}}, {"compose: " + xy.to_string()}};
}

Outcome do_construction(const Options& o, const std::string& verb) {
  const CorrClass x = io::corr_from_json(load_input(o.input));
  CorrClass result;
  Ideal ideal;
  if (verb == "kernel") {
    result = kernel(x);
    ideal = left_kernel(x);
  } else if (verb == "cokernel") {
    result = cokernel(x);
    ideal = right_support(x);
  } else if (verb == "image") {
    result = schubert_image(x);
    ideal = right_support(x);
  } else {
    result = schubert_coimage(x);
    ideal = left_kernel(x);
  }
  return {Json{{"result", io::to_json(result)}, {"ideal", io::to_json(ideal)}},
          {verb + ": " + result.to_string()}};
}

Outcome do_predicates(const Options& o) {
  const CorrClass x = io::corr_from_json(load_input(o.input));
  Json r{{"is_full", is_full(x)},
         {"phi_injective", phi_injective(x)},
         {"is_hilbert_bimodule", is_hilbert_bimodule(x)},
         {"is_split_mono", is_split_mono(x)},
         {"is_split_epi", is_split_epi(x)},
         {"is_invertible", is_invertible(x)},
         {"is_zero", x.is_zero()},
         {"right_support", io::to_json(right_support(x))},
         {"left_kernel", io::to_json(left_kernel(x))}};
  if (!x.matrix().has_inf()) {
    r["mono_probe"] = io::to_json(mono_finite_rank_test(x));
    r["epi_probe"] = io::to_json(epi_finite_rank_test(x));
  }
  std::vector<std::string> lines{"classify-predicates: " + x.to_string()};
  for (const char* key : {"is_full", "phi_injective", "is_hilbert_bimodule", "is_split_mono",
                          "is_split_epi", "is_invertible"}) {
    lines.push_back(std::string("  ") + key + " = " + (r[key].get<bool>() ? "true" : "false"));
  }
  return {r, lines};
}

std::string members_text(const Ideal& i) {
  std::string s = "{";
  for (std::size_t k = 0; k < i.members().size(); ++k) {
    s += (k ? "," : "") + std::to_string(i.members()[k] + 1);
  }
  return s + "}";
}

Outcome do_check_exact(const Options& o) {
  const SequenceSpec seq = io::sequence_from_json(load_input(o.input));
  Outcome out;
  ExactnessReport r;
  // Three algebras describe 0 -> A -> B -> C -> 0.
  if (seq.algebras.size() == 3) {
    r = check_short_exact(seq.correspondences[0], seq.correspondences[1]);
    out.summary.push_back("check-exact: short sequence 0 -> " + seq.algebras[0].to_string() +
                          " -> " + seq.algebras[1].to_string() + " -> " +
                          seq.algebras[2].to_string() + " -> 0");
    const auto& c = *r.conditions;
    const std::array<std::pair<const char*, bool>, 3> conds{
        {{kConditionInjective, c.phi_injective},
         {kConditionSupport, c.support_is_kernel},
         {kConditionFull, c.target_full}}};
    for (const auto& [name, ok] : conds) {
      out.summary.push_back(std::string("  ") + (ok ? "satisfied " : "VIOLATED  ") + name);
    }
  } else {
    r = check_sequence(seq);
    out.summary.push_back("check-exact: chain of " + std::to_string(seq.correspondences.size()) +
                          " morphisms");
  }
  for (const auto& n : r.nodes) {
    out.summary.push_back("  node " + std::to_string(n.node) + ": " +
                          (n.exact ? "exact" : "NOT exact") + " (image " +
                          members_text(n.image) + ", kernel " + members_text(n.kernel) + ")");
  }
  out.summary.push_back(r.exact ? "verdict: exact" : "verdict: not exact");
  out.report = io::to_json(r);
  out.code = r.exact ? kExitOk : kExitVerdictFalse;
  return out;
}

Outcome do_oracle_tensor(const Options& o) {
  const auto [x, y] = load_pair(load_input(o.input));
  const auto tol = tolerances(o);
  const CorrClass symbolic = compose(x, y);
  const auto t = concrete::interior_tensor(concrete::realize(x), concrete::realize(y), tol);
  const CorrClass numeric = concrete::classify(t.corr(), tol);
  const bool numeric_zero = t.norm() < 1e-9;
  const bool agree = numeric == symbolic && numeric_zero == tensor_is_zero(x, y);
  Json fibers = Json::array();
  for (const auto& f : t.fibers()) {
    fibers.push_back(Json{{"generators", f.generator_count},
                          {"surviving", f.surviving},
                          {"rank", f.rank},
                          {"max_eigenvalue", f.max_eigenvalue},
                          {"min_eigenvalue", f.min_eigenvalue}});
  }
  Outcome out;
  out.report = Json{{"symbolic", io::to_json(symbolic)},
                    {"numeric", io::to_json(numeric)},
                    {"tensor_norm", t.norm()},
                    {"tensor_is_zero", tensor_is_zero(x, y)},
                    {"validation", io::to_json(concrete::validate(t.corr(), tol))},
                    {"fibers", fibers},
                    {"agree", agree}};
  out.summary = {"oracle-tensor: symbolic " + symbolic.matrix().to_string() + ", numeric " +
                     numeric.matrix().to_string(),
                 std::string("  ") + (agree ? "agree" : "DISAGREE")};
  out.code = agree ? kExitOk : kExitVerdictFalse;
  return out;
}

Outcome do_gallery(const Options& o) {
  std::vector<std::string> names;
  if (o.gallery_name.empty() || o.gallery_name == "all") {
    names = gallery_names();
  } else {
    names.push_back(o.gallery_name);
  }
  Outcome out;
  Json entries = Json::array();
  bool ok = true;
  for (const auto& n : names) {
    const GalleryTranscript t = gallery(n);
    ok = ok && t.passed();
    entries.push_back(io::to_json(t));
    std::istringstream text(t.to_text());
    for (std::string line; std::getline(text, line);) out.summary.push_back(line);
  }
  out.report = Json{{"entries", entries}, {"passed", ok}};
  out.code = ok ? kExitOk : kExitVerdictFalse;
  return out;
}

Outcome do_random_check(const Options& o) {
  if (o.max_blocks < 1 || o.max_dim < 1 || o.max_entry < 1) {
    throw ValidationError("--max-blocks, --max-dim and --max-entry must be at least 1");
  }
  RandomCheckOptions opt;
  opt.seed = o.seed;
  opt.count = o.count;
  opt.bounds = Bounds{o.max_blocks, o.max_dim, o.max_entry};
  opt.tolerances = tolerances(o);
  const RandomCheckReport r = random_check(opt);
  Json suites = Json::array();
  for (const auto& s : r.suites) {
    suites.push_back(Json{{"name", s.name},
                          {"cases", s.cases},
                          {"failures", s.failures},
                          {"samples", s.samples}});
  }
  Outcome out;
  out.report = Json{{"seed", opt.seed},
                    {"count", opt.count},
                    {"max_blocks", opt.bounds.max_blocks},
                    {"max_dim", opt.bounds.max_dim},
                    {"max_entry", opt.bounds.max_entry},
                    {"suites", suites},
                    {"passed", r.passed()}};
  std::istringstream text(r.transcript());
  for (std::string line; std::getline(text, line);) out.summary.push_back(line);
  out.code = r.passed() ? kExitOk : kExitVerdictFalse;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in the category of finite-dimensional C*-algebras and "
               "correspondences"};
  app.name("enchilada");
  app.require_subcommand(1);
  Options o;
  std::string tolerance_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "JSON file path, or inline JSON starting with '{'");
    sub->add_option("--tolerance", o.tolerance, "relative null-space tolerance for Gram quotients");
    sub->add_flag("--json-only", o.json_only, "print only the JSON report");
  };

  std::vector<std::pair<std::string, std::string>> verbs{
      {"compose", "compose {\"first\": X, \"second\": Y}"},
      {"kernel", "kernel of a correspondence"},
      {"cokernel", "cokernel of a correspondence"},
      {"image", "Schubert image of a correspondence"},
      {"coimage", "Schubert coimage of a correspondence"},
      {"classify-predicates", "fullness, injectivity, Hilbert-bimodule and split predicates"},
      {"check-exact", "exactness of a sequence (three algebras: 0 -> A -> B -> C -> 0)"},
      {"oracle-tensor", "numeric interior tensor product versus the matrix product"},
      {"gallery", "run a worked example"},
      {"random-check", "seeded invariant suites"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    subs[name] = sub;
  }
  subs["gallery"]->add_option("name", o.gallery_name, "entry name, or 'all'");
  for (CLI::App* sub : {subs["random-check"], subs["gallery"]}) {
    sub->add_option("--seed", o.seed, "random seed");
  }
  CLI::App* rc = subs["random-check"];
  rc->add_option("--count", o.count, "cases per suite");
  rc->add_option("--max-blocks", o.max_blocks, "maximum blocks per algebra");
  rc->add_option("--max-dim", o.max_dim, "maximum block size");
  rc->add_option("--max-entry", o.max_entry, "maximum multiplicity");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Outcome result;
  try {
    if (verb == "compose") {
      result = do_compose(o);
    } else if (verb == "kernel" || verb == "cokernel" || verb == "image" || verb == "coimage") {
      result = do_construction(o, verb);
    } else if (verb == "classify-predicates") {
      result = do_predicates(o);
    } else if (verb == "check-exact") {
      result = do_check_exact(o);
    } else if (verb == "oracle-tensor") {
      result = do_oracle_tensor(o);
    } else if (verb == "gallery") {
      result = do_gallery(o);
    } else {
      result = do_random_check(o);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    if (o.json_only) out << Json{{"error", e.what()}}.dump() << "\n";
    return kExitInputError;
  }

  if (!o.json_only) {
    for (const auto& line : result.summary) out << line << "\n";
  }
  out << result.report.dump(o.json_only ? -1 : 2) << "\n";
  return result.code;
}

}  // namespace enchilada::cli
