#include "heartproof/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "heartproof/certificate_io.hpp"
#include "heartproof/error.hpp"
#include "heartproof/meataxe.hpp"
#include "heartproof/modrep.hpp"
#include "heartproof/simplicity.hpp"
#include "heartproof/weights.hpp"

namespace heartproof::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::shared_ptr<const PermGroup> load_group_file(const fs::path& path) {
  auto set = parse_generator_file(read_file(path));
  return std::make_shared<const PermGroup>(set.degree, set.generators);
}

struct LoadedGroup {
  std::shared_ptr<const PermGroup> group;
  std::optional<GroupTag> tag;
  std::string label;
};

LoadedGroup load_group(const std::optional<std::string>& tag_text, const std::optional<fs::path>& file,
                       std::uint32_t n) {
  LoadedGroup g;
  if (file) {
    g.group = load_group_file(*file);
    g.label = file->stem().string();
    return g;
  }
  g.tag = GroupTag::parse(*tag_text, n);
  g.label = g.tag->name();
  if (auto c = concrete_group(*g.tag)) g.group = std::make_shared<const PermGroup>(std::move(*c));
  return g;
}

std::string join_degrees(const std::vector<std::uint32_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

std::string describe_probe(const GaloisEvidence& e) {
  std::ostringstream os;
  os << "probe: f = " << e.f.to_string() << ", degree " << e.n << ", budget " << e.budget << ", seed " << e.seed << '\n';
  os << "probe: disc = " << e.disc;
  if (e.disc_is_square) os << (*e.disc_is_square ? " (square)" : " (not a square)");
  os << '\n';
  auto witness = [&](const char* name, const std::optional<std::uint64_t>& w) {
    os << "probe: " << name << " witness: " << (w ? "p = " + std::to_string(*w) : std::string("none")) << '\n';
  };
  witness("irreducible", e.irreducible_witness);
  witness("transposition", e.transposition_witness);
  witness("(n-1)-cycle", e.two_transitive_witness);
  witness("prime-cycle", e.prime_cycle_witness);
  os << "probe: conclusion " << to_string(e.conclusion) << (e.tag.empty() ? "" : " (" + e.tag + ")") << '\n';
  return os.str();
}

}  // namespace

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* v = std::getenv("HEARTPROOF_SEED");
  if (!v || !*v) return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, std::string("HEARTPROOF_SEED is not an integer: ") + v);
  }
}

Scenario build_scenario(const ScenarioInput& in) {
  Scenario s;
  s.p = in.p;
  s.r = in.r;
  s.zeta_q_in_K = in.assume_zeta;
  s.seed = in.seed;
  const int sources = (in.poly ? 1 : 0) + (in.group ? 1 : 0) + (in.group_file ? 1 : 0);
  if (sources != 1) throw Error(ErrorCode::InvalidScenario, "exactly one of poly, group or group file is required");
  if (in.poly) {
    auto f = PolyZ::parse(*in.poly);
    if (f.degree() < 1) throw Error(ErrorCode::InvalidScenario, "polynomial must be nonconstant");
    s.source = GroupSource::PolynomialEvidence;
    s.evidence = classify_galois(f, in.budget, in.seed);
    s.n = static_cast<std::uint32_t>(f.degree());
    if (in.n && in.n != s.n) throw Error(ErrorCode::InvalidScenario, "n differs from the polynomial degree");
    s.group_label = s.evidence->tag.empty() ? "Unknown" : s.evidence->tag;
  } else {
    auto g = load_group(in.group, in.group_file, in.n);
    s.n = in.n ? in.n : static_cast<std::uint32_t>(g.tag ? g.tag->degree() : g.group->degree());
    s.group = g.group;
    s.group_label = g.label;
    if (g.tag) {
      s.source = GroupSource::Tag;
      s.tag = *g.tag;
    } else {
      s.source = GroupSource::ConcreteGroup;
    }
  }
  validate(s);
  return s;
}

int exit_code_for(const Certificate& c) {
  return c.conclusion.kind == ConclusionKind::Inconclusive ? kExitInconclusive : kExitConclusive;
}

FixtureSummary run_fixtures(const fs::path& path, std::ostream& out, std::ostream& err, bool update) {
  const std::string text = read_file(path);
  const fs::path base = path.parent_path();
  FixtureSummary summary;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  std::size_t cases = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++cases;
    json fx;
    try {
      fx = json::parse(line);
    } catch (const json::exception& e) {
      err << path.string() << ":" << lineno << ": parse error: " << e.what() << '\n';
      ++summary.failed;
      continue;
    }
    const std::string name = fx.value("name", "line " + std::to_string(lineno));
    std::vector<std::string> problems;
    try {
      const json& sc = fx.at("scenario");
      const json& ex = fx.at("expect");
      ScenarioInput in;
      if (sc.contains("poly")) in.poly = sc["poly"].get<std::string>();
      if (sc.contains("group")) in.group = sc["group"].get<std::string>();
      if (sc.contains("group_file")) in.group_file = base / sc["group_file"].get<std::string>();
      in.n = sc.value("n", 0u);
      in.p = sc.at("p").get<std::uint32_t>();
      in.r = sc.value("r", 1u);
      in.assume_zeta = sc.value("assume_zeta", false);
      in.seed = sc.value("seed", std::uint64_t{0});
      in.budget = sc.value("budget", std::uint64_t{40});

      std::optional<Certificate> cert;
      int code = kExitError;
      std::string error_code;
      try {
        cert = dispatch(build_scenario(in));
        code = exit_code_for(*cert);
      } catch (const Error& e) {
        error_code = std::string(to_string(e.code()));
      }

      if (ex.contains("exit") && ex["exit"].get<int>() != code)
        problems.push_back("exit " + std::to_string(code) + ", expected " + std::to_string(ex["exit"].get<int>()));
      if (ex.contains("error") && ex["error"].get<std::string>() != error_code)
        problems.push_back("error '" + error_code + "', expected '" + ex["error"].get<std::string>() + "'");
      if (cert) {
        const std::string report = explain(*cert);
        if (ex.contains("theorem") && ex["theorem"].get<std::string>() != cert->theorem)
          problems.push_back("theorem " + cert->theorem + ", expected " + ex["theorem"].get<std::string>());
        if (ex.contains("conclusion") && ex["conclusion"].get<std::string>() != to_string(cert->conclusion.kind))
          problems.push_back("conclusion " + to_string(cert->conclusion.kind));
        if (ex.contains("ring") && ex["ring"].get<std::string>() != cert->conclusion.ring)
          problems.push_back("ring '" + cert->conclusion.ring + "', expected '" + ex["ring"].get<std::string>() + "'");
        if (ex.contains("dimension")) {
          const std::string got = cert->conclusion.dimension ? cert->conclusion.dimension->str() : "none";
          if (got != ex["dimension"].get<std::string>()) problems.push_back("dimension " + got);
        }
        if (ex.contains("first_failure")) {
          auto f = cert->first_failure();
          const std::string got = f ? cert->checks[*f].anchor : "none";
          if (got != ex["first_failure"].get<std::string>()) problems.push_back("first failure '" + got + "'");
        }
        if (ex.contains("report_contains"))
          for (const auto& needle : ex["report_contains"])
            if (report.find(needle.get<std::string>()) == std::string::npos)
              problems.push_back("report lacks '" + needle.get<std::string>() + "'");
        if (!cert->all_checks_pass() && cert->conclusion.kind != ConclusionKind::Inconclusive)
          problems.push_back("conclusive certificate with a failed check");
        const std::string serialized = certificate_to_json(*cert);
        if (explain(certificate_from_json(serialized)) != report) problems.push_back("report does not round-trip");
        if (ex.contains("golden")) {
          const fs::path golden = base / ex["golden"].get<std::string>();
          if (update) {
            std::ofstream(golden, std::ios::binary) << serialized;
          } else if (!fs::exists(golden)) {
            problems.push_back("missing golden " + golden.string());
          } else if (read_file(golden) != serialized) {
            problems.push_back("certificate differs from " + golden.string());
          }
        }
      }
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
    if (problems.empty()) {
      ++summary.passed;
      out << "ok   " << name << '\n';
    } else {
      ++summary.failed;
      out << "FAIL " << name << " (line " << lineno << ")";
      for (const auto& p : problems) out << "; " << p;
      out << '\n';
    }
  }
  if (cases == 0) err << "warning: " << path.string() << " contains no fixtures\n";
  out << summary.passed << " passed, " << summary.failed << " failed\n";
  return summary;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified endomorphism verdicts for superelliptic jacobians"};
  app.name("heartproof");
  app.require_subcommand(1);

  ScenarioInput in;
  std::string group_file;
  std::string json_path;
  std::string fixture_path;
  bool update = false;

  auto scenario_flags = [&](CLI::App* sub, bool with_poly) {
    if (with_poly) sub->add_option("--poly", in.poly, "integer polynomial, e.g. \"x^5 - x - 1\"");
    sub->add_option("--group", in.group, "group tag: S, A, S7, A5, M11, L2(13), U3(3)");
    sub->add_option("--group-file", group_file, "generator file of a custom permutation group");
    sub->add_option("--n", in.n, "number of roots (degree of the action)");
  };

  auto* analyze = app.add_subcommand("analyze", "decide the endomorphism ring or algebra for a scenario");
  scenario_flags(analyze, true);
  analyze->add_option("--p", in.p, "odd prime")->required();
  analyze->add_option("--r", in.r, "exponent of q = p^r")->check(CLI::PositiveNumber);
  analyze->add_flag("--assume-zeta", in.assume_zeta, "the base field contains a primitive q-th root of unity");
  analyze->add_option("--json", json_path, "write the certificate to this path");
  analyze->add_option("--budget", in.budget, "primes sampled by the Galois probe");

  auto* heart_cmd = app.add_subcommand("heart", "analyze the heart of a permutation group over F_p");
  scenario_flags(heart_cmd, false);
  heart_cmd->add_option("--p", in.p, "odd prime")->required();

  auto* weights_cmd = app.add_subcommand("weights", "weight multiplicities of y^q = f(x)");
  std::uint32_t wn = 0, wp = 0, wr = 1;
  weights_cmd->add_option("--n", wn, "degree of f")->required();
  weights_cmd->add_option("--p", wp, "odd prime")->required();
  weights_cmd->add_option("--r", wr, "exponent of q = p^r")->check(CLI::PositiveNumber);

  auto* group_cmd = app.add_subcommand("group", "order and transitivity of a permutation group");
  scenario_flags(group_cmd, false);

  auto* probe_cmd = app.add_subcommand("probe", "Frobenius cycle-type evidence for a Galois group");
  std::string probe_poly;
  probe_cmd->add_option("--poly", probe_poly, "integer polynomial")->required();
  probe_cmd->add_option("--budget", in.budget, "number of primes sampled");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "replay a JSONL fixture corpus");
  fixtures_cmd->add_option("--run", fixture_path, "fixture file")->required();
  fixtures_cmd->add_flag("--update", update, "rewrite golden certificates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }
  if (!group_file.empty()) in.group_file = group_file;

  try {
    in.seed = seed_from_env(0);
    if (*analyze) {
      if (!in.poly && !in.group && !in.group_file) {
        err << "analyze: one of --poly, --group or --group-file is required\n";
        return kExitUsage;
      }
      Scenario s = build_scenario(in);
      if (s.evidence) out << describe_probe(*s.evidence);
      Certificate c = dispatch(s);
      out << explain(c);
      if (!json_path.empty()) {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write " + json_path);
        f << certificate_to_json(c);
      }
      return exit_code_for(c);
    }
    if (*heart_cmd || *group_cmd) {
      if (!in.group && !in.group_file) {
        err << "one of --group or --group-file is required\n";
        return kExitUsage;
      }
      auto g = load_group(in.group, in.group_file, in.n);
      if (!g.group) throw Error(ErrorCode::TooLarge, g.label + " has no concrete permutation representation here");
      const PermGroup& G = *g.group;
      out << "group: " << g.label << " degree " << G.degree() << " order " << G.order() << '\n';
      if (*group_cmd) {
        out << "orbits: " << G.orbits().size() << '\n';
        out << "transitive: " << (G.is_transitive() ? "yes" : "no") << '\n';
        out << "doubly transitive: " << (G.is_doubly_transitive() ? "yes" : "no") << '\n';
        std::vector<std::uint32_t> sizes;
        for (auto s : G.transversal_sizes()) sizes.push_back(static_cast<std::uint32_t>(s));
        out << "transversal sizes: " << join_degrees(sizes) << '\n';
        return kExitConclusive;
      }
      auto h = heart(G, in.p);
      out << "heart: dimension " << h.module.dim() << " over F_" << in.p
          << (h.kind == HeartKind::Quotient ? " (hyperplane modulo constants)" : " (zero-sum hyperplane)") << '\n';
      auto irr = is_irreducible(h.module, in.seed);
      out << "irreducible: " << (irr.irreducible ? "yes" : "no") << " after " << irr.attempts << " elements";
      if (irr.irreducible) out << ", " << irr.certificate;
      if (!irr.irreducible) out << ", invariant subspace of dimension " << irr.invariant_subspace.size();
      out << '\n';
      out << "commutant dimension: " << commutant_dim(h.module) << '\n';
      auto v = decide_heart_simplicity(&G, g.tag, in.p, in.seed);
      out << "simplicity: " << to_string(v.level) << '\n';
      for (const auto& e : v.evidence) out << "  " << to_string(e.kind) << ": " << e.anchor << ": " << e.detail << '\n';
      return kExitConclusive;
    }
    if (*weights_cmd) {
      auto profile = weight_profile(CurveParams::make(wn, wp, wr));
      out << format_profile(profile);
      return kExitConclusive;
    }
    if (*probe_cmd) {
      auto e = classify_galois(PolyZ::parse(probe_poly), in.budget, in.seed);
      out << describe_probe(e);
      for (const auto& pat : e.patterns) out << "  p = " << pat.prime << ": " << join_degrees(pat.degrees) << '\n';
      const std::string problem = verify_evidence(e);
      out << "verification: " << (problem.empty() ? "ok" : problem) << '\n';
      return problem.empty() ? kExitConclusive : kExitError;
    }
    if (*fixtures_cmd) {
      auto summary = run_fixtures(fixture_path, out, err, update);
      return summary.failed == 0 ? kExitConclusive : kExitError;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace heartproof::cli
