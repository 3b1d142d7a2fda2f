#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "dualwave/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dualwave: dual-manifold spectral dynamics toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string corrupt;

  const auto add_run = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--config", config_path, "configuration file")->required();
    sub->add_option("--out", out_dir, "output directory (overrides [output] dir)");
    sub->add_option("--seed", seed, "master seed (overrides [ensemble] seed)")
        ->each([&](const std::string&) { seed_set = true; });
    return sub;
  };

  CLI::App* evolve_xt = add_run("evolve-xt", "propagate psi(x) in time");
  CLI::App* evolve_ke = add_run("evolve-ke", "propagate phi(k) in energy");
  CLI::App* dark = add_run("dark-energy", "random-phase ensemble projection");
  CLI::App* horizon = add_run("horizon", "boundary chirp and thermal spectrum");
  CLI::App* self = app.add_subcommand("selfcheck", "fast invariant suite");
  self->add_option("--corrupt", corrupt, "test hook: sabotage a named check")
      ->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  if (self->parsed()) return dualwave::selfcheck(corrupt);

  dualwave::RunOptions opts;
  for (CLI::App* sub : {evolve_xt, evolve_ke, dark, horizon})
    if (sub->parsed()) opts.command = sub->get_name();
  opts.config_path = config_path;
  if (!out_dir.empty()) opts.out_dir = out_dir;
  if (seed_set) opts.seed = seed;
  return dualwave::run_command(opts);
}
