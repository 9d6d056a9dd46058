// lindeg: classify linear degenerations of partial flag varieties.

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lindeg/classifier.hpp"
#include "lindeg/enumerator.hpp"
#include "lindeg/errors.hpp"
#include "lindeg/io.hpp"
#include "lindeg/orbits.hpp"
#include "lindeg/verify.hpp"
#include "lindeg/version.hpp"

namespace {

using nlohmann::json;
using namespace lindeg;

constexpr int kExitOk = 0;
constexpr int kExitProperty = 1;
constexpr int kExitValidation = 2;
constexpr int kExitGuard = 3;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<int> parse_d(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("--d must be a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

struct Options {
  std::string input;
  int m = 0;
  int n = 0;
  std::string d;
  int h = 0;
  unsigned prime = 0;
  std::string format = "table";
  std::uint64_t seed = 20240601;
  bool census = false;
  std::string suite = "all";
};

// Report envelope shared by every subcommand.
json envelope(const std::string& command, const std::string& input_bytes, json result) {
  return {{"command", command},
          {"version", kVersion},
          {"input_sha256", sha256_hex(input_bytes)},
          {"result", std::move(result)}};
}

void print_header(const json& env) {
  std::cout << "lindeg " << env["version"].get<std::string>() << " " << env["command"].get<std::string>()
            << "\n";
  std::cout << "input sha256: " << env["input_sha256"].get<std::string>() << "\n";
}

struct Loaded {
  std::string bytes;
  ProblemFile problem;
};

Loaded load(const Options& o) {
  if (o.input.empty()) throw ValidationError("--input FILE is required");
  std::string bytes = read_file(o.input);
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (o.prime != 0 && root.is_object()) root["field"] = {{"kind", "prime"}, {"p", o.prime}};
  return {std::move(bytes), parse_problem(root)};
}

std::string args_fingerprint(const std::string& command, const Options& o) {
  return command + " m=" + std::to_string(o.m) + " n=" + std::to_string(o.n) + " d=" + o.d +
         " h=" + std::to_string(o.h);
}

int cmd_classify(const Options& o) {
  const Loaded in = load(o);
  const DegenerationReport report = classify(in.problem.rep, in.problem.d);
  json result = to_json(report);
  result["field"] = in.problem.rep.field().name();
  const json env = envelope("classify", in.bytes, result);
  if (o.format == "json") {
    std::cout << env.dump(2) << "\n";
  } else {
    print_header(env);
    std::cout << "field: " << in.problem.rep.field().name() << "\n" << to_table(report);
  }
  return kExitOk;
}

std::string flag_line(const DegenerationReport& r) {
  std::string s;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ", ";
    s += name;
  };
  add(r.smooth, "smooth");
  add(r.irreducible, "irreducible");
  add(r.flat.flat_in_stratum, "flat");
  add(r.flat.flat_irr_in_stratum, "flat-irr");
  return s.empty() ? "-" : s;
}

int cmd_orbits(const Options& o) {
  if (o.m < 1 || o.n < 1) throw ValidationError("orbits needs --m and --n");
  const DimVector d(o.m, parse_d(o.d));
  if (d.n() != o.n) throw ValidationError("--d must have n = " + std::to_string(o.n) + " entries");
  const std::vector<RankSequence> orbits = enumerate_orbits(o.m, o.n);
  const std::string fingerprint = args_fingerprint("orbits", o);
  if (o.format == "dot") {
    std::cout << hasse_dot(orbits, [&](const RankSequence& r) { return flag_line(classify(r, d)); });
    return kExitOk;
  }
  json list = json::array();
  for (const RankSequence& r : orbits) list.push_back(to_json(classify(r, d)));
  const json env = envelope("orbits", fingerprint, {{"count", orbits.size()}, {"orbits", list}});
  if (o.format == "json") {
    std::cout << env.dump(2) << "\n";
    return kExitOk;
  }
  print_header(env);
  std::cout << "orbits: " << orbits.size() << "\n";
  for (const RankSequence& r : orbits) {
    const DegenerationReport rep = classify(r, d);
    std::cout << dot_node_name(r) << "  " << rep.decomposition.to_string() << "  [" << flag_line(rep) << "]";
    if (rep.dimension) std::cout << "  dim " << *rep.dimension;
    if (rep.singular) {
      const SingularInfo& s = *rep.singular;
      if (s.kind == SingularKind::empty) std::cout << "  sing empty";
      if (s.kind == SingularKind::exact) std::cout << "  sing codim " << *s.sing_codim;
      if (s.kind == SingularKind::bounded)
        std::cout << "  sing codim [" << *s.codim_lower << "," << *s.codim_upper << "]";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_strata(const Options& o) {
  if (o.n < 1) throw ValidationError("strata needs --n");
  if (o.format == "dot") {
    std::cout << strata_dot(o.n);
    return kExitOk;
  }
  json list = json::array();
  for (const Stratum& s : all_strata(o.n)) list.push_back(s.arrows);
  const json env = envelope("strata", args_fingerprint("strata", o), {{"strata", list}});
  if (o.format == "json") {
    std::cout << env.dump(2) << "\n";
    return kExitOk;
  }
  print_header(env);
  for (const Stratum& s : all_strata(o.n)) std::cout << "S" << s.to_string() << "\n";
  return kExitOk;
}

int cmd_enumerate(const Options& o) {
  const Loaded in = load(o);
  const ProblemFile& p = in.problem;
  json result = {{"field", p.rep.field().name()}, {"points", count_subreps(p.rep, p.d.values())}};
  if (o.census) result["census"] = to_json(singular_point_census(p.rep, p.d));
  if (p.projections) result["fixed_points"] = fixed_points(*p.projections, p.d.values()).size();
  const json env = envelope("enumerate", in.bytes, result);
  if (o.format == "json") {
    std::cout << env.dump(2) << "\n";
    return kExitOk;
  }
  print_header(env);
  std::cout << "field: " << result["field"].get<std::string>() << "\n";
  std::cout << "points: " << result["points"] << "\n";
  if (result.contains("census"))
    std::cout << "singular points: " << result["census"]["singular"] << "\n";
  if (result.contains("fixed_points")) std::cout << "fixed points: " << result["fixed_points"] << "\n";
  return kExitOk;
}

int cmd_fixed_points(const Options& o) {
  const Loaded in = load(o);
  const std::optional<ProjectionTuple> j =
      in.problem.projections ? in.problem.projections : as_projection_tuple(in.problem.rep);
  if (!j) throw ValidationError("fixed-points needs every map to be a coordinate projection");
  const std::vector<CoordinatePoint> points = fixed_points(*j, in.problem.d.values());
  json list = json::array();
  for (const CoordinatePoint& pt : points) list.push_back(to_json(pt));
  const json env = envelope("fixed-points", in.bytes, {{"count", points.size()}, {"points", list}});
  if (o.format == "json") {
    std::cout << env.dump(2) << "\n";
    return kExitOk;
  }
  print_header(env);
  std::cout << "fixed points: " << points.size() << "\n";
  for (const CoordinatePoint& pt : points) {
    for (std::size_t v = 0; v < pt.sets.size(); ++v) {
      std::cout << (v ? " " : "") << "{";
      for (std::size_t k = 0; k < pt.sets[v].size(); ++k) std::cout << (k ? "," : "") << pt.sets[v][k];
      std::cout << "}";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_singular(const Options& o) {
  SingularInfo info;
  json env;
  if (!o.input.empty()) {
    const Loaded in = load(o);
    info = singular_summary(RankSequence::of(in.problem.rep), in.problem.d);
    env = envelope("singular", in.bytes, to_json(info));
  } else {
    if (o.m < 1 || o.h < 1) throw ValidationError("singular needs --input FILE, or --m, --d and --arrow");
    const DimVector d(o.m, parse_d(o.d));
    info = singular_model_Mh(o.m, d, o.h);
    env = envelope("singular", args_fingerprint("singular", o), to_json(info));
  }
  if (o.format == "json") {
    std::cout << env.dump(2) << "\n";
    return kExitOk;
  }
  print_header(env);
  std::cout << "kind: " << to_string(info.kind) << "\n";
  if (info.sing_dim) std::cout << "dimension: " << *info.sing_dim << "\n";
  if (info.sing_codim) std::cout << "codimension: " << *info.sing_codim << "\n";
  if (info.codim_lower) std::cout << "codimension bounds: [" << *info.codim_lower << ", " << *info.codim_upper << "]\n";
  if (info.model) {
    std::cout << "model module: " << info.model->module.to_string() << "\n";
    std::cout << "model d:";
    for (int x : info.model->d) std::cout << " " << x;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const std::vector<SuiteResult> results = run_verify(o.suite, o.seed);
  bool ok = true;
  json suites = json::array();
  for (const SuiteResult& s : results) {
    json props = json::array();
    for (const PropertyResult& p : s.properties) {
      json j = {{"name", p.name}, {"checked", p.checked}, {"failed", p.failed}};
      if (p.failed) j["first_failure"] = p.first_failure;
      props.push_back(j);
    }
    suites.push_back({{"suite", s.suite}, {"passed", s.passed()}, {"properties", props}});
    ok = ok && s.passed();
  }
  const json env = envelope("verify", "verify " + o.suite + " seed=" + std::to_string(o.seed),
                            {{"seed", o.seed}, {"suites", suites}, {"passed", ok}});
  if (o.format == "json") {
    std::cout << env.dump(2) << "\n";
  } else {
    print_header(env);
    for (const SuiteResult& s : results) {
      std::cout << (s.passed() ? "PASS " : "FAIL ") << s.suite << "\n";
      for (const PropertyResult& p : s.properties) {
        std::cout << "  " << p.name << ": " << (p.checked - p.failed) << "/" << p.checked << " passed";
        if (p.failed) std::cout << "; first failure: " << p.first_failure;
        std::cout << "\n";
      }
    }
  }
  return ok ? kExitOk : kExitProperty;
}

void print_error(const std::string& kind, const std::string& message, int code) {
  std::cerr << json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify linear degenerations of partial flag varieties", "lindeg"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats = {"table", "dot", "json"};

  auto with_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Problem file (JSON)");
    sub->add_option("--prime", o.prime, "Override the field with F_p");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "Full degeneration report for a problem file");
  with_input(classify_cmd);
  with_format(classify_cmd);

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "All orbits for (m, n) with flags for d");
  orbits_cmd->add_option("--m", o.m)->required();
  orbits_cmd->add_option("--n", o.n)->required();
  orbits_cmd->add_option("--d", o.d, "Comma-separated dimension vector")->required();
  with_format(orbits_cmd);

  CLI::App* strata_cmd = app.add_subcommand("strata", "Strata S_I and their closure order");
  strata_cmd->add_option("--n", o.n)->required();
  strata_cmd->add_option("--m", o.m);
  with_format(strata_cmd);

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "Count points over F_p");
  with_input(enumerate_cmd);
  enumerate_cmd->add_flag("--census", o.census, "Count Ext-singular points");
  with_format(enumerate_cmd);

  CLI::App* fixed_cmd = app.add_subcommand("fixed-points", "Coordinate points of a projection tuple");
  with_input(fixed_cmd);
  with_format(fixed_cmd);

  CLI::App* singular_cmd = app.add_subcommand("singular", "Singular locus summary or the M^h model");
  with_input(singular_cmd);
  singular_cmd->add_option("--m", o.m);
  singular_cmd->add_option("--d", o.d);
  singular_cmd->add_option("--arrow", o.h, "Arrow h of the M^h model");
  with_format(singular_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("suite", o.suite, "exthom, classify-consistency, roundtrip, sigma, rankcomposition or all");
  verify_cmd->add_option("--seed", o.seed);
  with_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what(), kExitValidation);
    return kExitValidation;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*orbits_cmd) return cmd_orbits(o);
    if (*strata_cmd) return cmd_strata(o);
    if (*enumerate_cmd) return cmd_enumerate(o);
    if (*fixed_cmd) return cmd_fixed_points(o);
    if (*singular_cmd) return cmd_singular(o);
    if (*verify_cmd) return cmd_verify(o);
  } catch (const GuardExceeded& e) {
    print_error(e.kind(), e.what(), kExitGuard);
    return kExitGuard;
  } catch (const Error& e) {
    print_error(e.kind(), e.what(), kExitValidation);
    return kExitValidation;
  }
  return kExitOk;
}
