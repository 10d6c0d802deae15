#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end and the fixture replay runner.
 *
 * Exit codes: 0 conclusive, 2 Inconclusive, 1 error, 64 usage error.
 */

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "heartproof/verdict.hpp"

namespace heartproof::cli {

inline constexpr int kExitConclusive = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;

/// Everything needed to assemble a Scenario from user input.
struct ScenarioInput {
  std::optional<std::string> poly;
  std::optional<std::string> group;
  std::optional<std::filesystem::path> group_file;
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t r = 1;
  bool assume_zeta = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = 40;
};

/// Builds and validates a scenario. Polynomials are classified by the
/// Galois probe; generator files become concrete groups labelled by their
/// file stem. Throws Error on invalid input.
Scenario build_scenario(const ScenarioInput& in);

/// Exit code implied by a certificate.
int exit_code_for(const Certificate& c);

/// Seed from HEARTPROOF_SEED, or `fallback` when unset.
std::uint64_t seed_from_env(std::uint64_t fallback = 0);

struct FixtureSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

/// Replays a JSONL fixture file. Paths inside fixtures resolve against the
/// file's directory. With `update`, golden certificates are rewritten.
FixtureSummary run_fixtures(const std::filesystem::path& path, std::ostream& out, std::ostream& err,
                            bool update = false);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heartproof::cli
