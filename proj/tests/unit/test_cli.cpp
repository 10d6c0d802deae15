#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "heartproof/certificate_io.hpp"
#include "heartproof/cli.hpp"

using namespace heartproof;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "heartproof");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
  auto path = fs::temp_directory_path() / ("heartproof_test_" + name);
  std::ofstream(path) << content;
  return path;
}

const std::string kData = std::string(HEARTPROOF_TEST_DATA) + "/data";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze a symmetric scenario") {
    auto r = run({"analyze", "--group", "S", "--n", "7", "--p", "11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Z[ζ_11]") != std::string::npos);
  }

  TEST_CASE("analyze M11 at p = 3 reports the failed Mathieu hypothesis") {
    auto r = run({"analyze", "--group", "M11", "--p", "3"});
    CHECK(r.out.find("p > 3 when n = 11") != std::string::npos);
    CHECK(r.out.find("theorem: mathieu") == std::string::npos);
  }

  TEST_CASE("analyze a polynomial") {
    auto r = run({"analyze", "--poly", "x^5-x-1", "--p", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ProvenSn") != std::string::npos);
    CHECK(r.out.find("theorem: alternating-or-symmetric") != std::string::npos);
  }

  TEST_CASE("inconclusive and invalid exit codes") {
    CHECK(run({"analyze", "--group", "L2(11)", "--p", "5"}).code == cli::kExitInconclusive);
    auto bad = run({"analyze", "--group", "S", "--n", "6", "--p", "3", "--r", "2"});
    CHECK(bad.code == cli::kExitError);
    CHECK(bad.err.find("InvalidScenario") != std::string::npos);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"analyze", "--group", "S"}).code == cli::kExitUsage);
    CHECK(run({"analyze", "--p", "5"}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"weights", "--n", "x", "--p", "5"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("weights table") {
    auto r = run({"weights", "--n", "5", "--p", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("genus 12 gcd 1") != std::string::npos);
    CHECK(run({"weights", "--n", "11", "--p", "5"}).out.find("gcd 2") != std::string::npos);
    auto na = run({"weights", "--n", "7", "--p", "7"});
    CHECK(na.code == cli::kExitError);
    CHECK(na.err.find("NotApplicable") != std::string::npos);
  }

  TEST_CASE("group and heart reports") {
    auto g = run({"group", "--group-file", kData + "/groups/psl2_13.txt"});
    CHECK(g.out.find("order 1092") != std::string::npos);
    CHECK(g.out.find("doubly transitive: yes") != std::string::npos);
    auto h = run({"heart", "--group", "A5", "--p", "11"});
    CHECK(h.code == 0);
    CHECK(h.out.find("dimension 4") != std::string::npos);
    CHECK(h.out.find("commutant dimension: 1") != std::string::npos);
  }

  TEST_CASE("probe report") {
    auto r = run({"probe", "--poly", "x^5 + 20x + 16"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(square)") != std::string::npos);
    CHECK(r.out.find("verification: ok") != std::string::npos);
  }

  TEST_CASE("json certificate round-trips to the same report") {
    auto path = fs::temp_directory_path() / "heartproof_test_cert.json";
    auto r = run({"analyze", "--group", "U3(3)", "--p", "5", "--json", path.string()});
    REQUIRE(r.code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(r.out == explain(certificate_from_json(ss.str())));
  }

  TEST_CASE("fixture runner") {
    auto ok = run({"fixtures", "--run", kData + "/fixtures.jsonl"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("14 passed, 0 failed") != std::string::npos);

    auto wrong = temp_file("wrong.jsonl",
                           "{\"name\": \"w\", \"scenario\": {\"group\": \"S\", \"n\": 7, \"p\": 11}, "
                           "\"expect\": {\"ring\": \"Z[ζ_13]\"}}\n");
    auto w = run({"fixtures", "--run", wrong.string()});
    CHECK(w.code != 0);
    CHECK(w.out.find("FAIL w") != std::string::npos);

    auto empty = temp_file("empty.jsonl", "");
    auto e = run({"fixtures", "--run", empty.string()});
    CHECK(e.code == 0);
    CHECK(e.err.find("warning") != std::string::npos);

    auto broken = temp_file("broken.jsonl", "\n{not json\n");
    auto b = run({"fixtures", "--run", broken.string()});
    CHECK(b.code != 0);
    CHECK(b.err.find(":2:") != std::string::npos);
  }

  TEST_CASE("seed from the environment") {
    setenv("HEARTPROOF_SEED", "17", 1);
    CHECK(cli::seed_from_env() == 17);
    unsetenv("HEARTPROOF_SEED");
    CHECK(cli::seed_from_env(3) == 3);
  }
}
