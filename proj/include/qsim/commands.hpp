#pragma once

// Subcommand implementations behind the `qsim` executable. Each returns the
// JSON document it would print plus the process exit code, so tests can drive
// the command surface without spawning a process.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsim/state.hpp"

namespace qsim::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 20140101;
inline constexpr unsigned kMaxCliQubits = 26;
inline constexpr std::uint64_t kMaxFactorN = std::uint64_t{1} << 20;

// Bad flag values. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOutput {
  Json body;
  int exit_code = kExitOk;
};

CommandOutput interference(std::uint64_t seed);

struct RunCircuitOptions {
  std::string path;
  std::string input = "0";
  std::uint64_t shots = 100;
  bool dump = false;
  std::uint64_t seed = kDefaultSeed;
};
CommandOutput run_circuit_file(const RunCircuitOptions& opts);
// Same, with the circuit text given directly (opts.path is ignored).
CommandOutput run_circuit_text(const std::string& text, const RunCircuitOptions& opts);

struct GroverOptions {
  unsigned n = 0;
  std::vector<BasisIndex> solutions;
  std::uint64_t trials = 100;
  std::uint64_t seed = kDefaultSeed;
};
CommandOutput grover(const GroverOptions& opts);

struct PeriodFindOptions {
  unsigned n_bits = 0;
  std::uint64_t period = 0;
  std::uint64_t trials = 10;
  std::uint64_t max_attempts = 32;
  std::uint64_t seed = kDefaultSeed;
};
CommandOutput period_find(const PeriodFindOptions& opts);

struct FactorOptions {
  std::uint64_t n = 0;
  std::uint64_t max_rounds = 20;
  std::uint64_t max_period_attempts = 32;
  std::uint64_t seed = kDefaultSeed;
};
CommandOutput factor(const FactorOptions& opts);

struct QftCheckOptions {
  unsigned max_n = 8;
  std::uint64_t states = 50;
  std::uint64_t seed = kDefaultSeed;
};
CommandOutput qft_check(const QftCheckOptions& opts);

// "101,7,3" -> {101, 7, 3}. UsageError on junk.
std::vector<BasisIndex> parse_index_list(const std::string& text);

// Text rendering of a command document: one "dotted.path: value" line per leaf.
std::string render_text(const Json& body);

}  // namespace qsim::cli
