#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace dualwave {

/// Exit-code taxonomy shared by the CLI and the tests.
enum ExitCode : int {
  exit_ok = 0,
  exit_config = 2,      // missing or unparseable config
  exit_validation = 3,  // bad parameter; message names the key
  exit_numerical = 4,   // numerical contract violation
};

struct RunOptions {
  std::string command;                // evolve-xt | evolve-ke | dark-energy | horizon
  std::string config_path;
  std::optional<std::string> out_dir; // overrides [output] dir
  std::optional<std::uint64_t> seed;  // overrides [ensemble] seed
};

/// Executes one command: parses the config, runs the module, writes CSV
/// reports (and DMF1 dumps when emit_fields), echoes the resolved config
/// into the output directory, prints a one-line summary.
int run_command(const RunOptions& opts);

/// Fast invariant suite: Fourier round trip, unitarity of both sectors,
/// hermiticity on n=32, single-mode dark-energy flatness, chirp consistency.
/// Prints one line per check; returns 0 iff all pass. `corrupt` is a test
/// hook naming a check to sabotage (currently "round-trip").
int selfcheck(const std::string& corrupt = {});

}  // namespace dualwave
