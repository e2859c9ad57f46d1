// hamfrac: homotopy-analysis series solutions of time-fractional PDEs with
// psi-Caputo time derivative. Writes CSV plot data.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hamfrac/cli/commands.hpp"
#include "hamfrac/cli/run_config.hpp"
#include "hamfrac/errors.hpp"

namespace {

using namespace hamfrac;
using namespace hamfrac::cli;

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

// Flags that mirror RunConfig fields: {flag, config key, help}.
struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr FlagSpec kRunFlags[] = {
    {"--problem", "problem", "diffusion | gasdyn | kdv"},
    {"--alpha", "alpha", "fractional order in (0, 1]"},
    {"--psi", "psi", "time warp: identity | log"},
    {"-a,--a", "a", "lower terminal a"},
    {"--hbar", "hbar", "convergence-control parameter (nonzero)"},
    {"-M,--terms", "terms", "highest term index M (u_0 .. u_M)"},
    {"--x-min", "x_min", "left end of the spatial grid"},
    {"--x-max", "x_max", "right end of the spatial grid"},
    {"--n-points", "n_points", "grid nodes (>= 8)"},
    {"-x,--probe-x", "probe_x", "spatial probe point"},
    {"--t-min", "t_min", "first time sample (default a)"},
    {"--t-max", "t_max", "last time sample (default t_min + 1)"},
    {"--t-samples", "t_samples", "number of time samples"},
    {"-o,--output", "output", "CSV output path ('-' for stdout)"},
    {"--spatial", "spatial", "spatial backend: exact | grid"},
};

struct RunOptions {
  std::string config_file;
  std::string write_config;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> given;
};

void add_run_options(CLI::App* sub, RunOptions& opts) {
  sub->add_option("-c,--config", opts.config_file, "flat key=value config file");
  sub->add_option("--write-config", opts.write_config, "write the effective config to this path");
  for (const auto& f : kRunFlags) {
    opts.given[f.key] = sub->add_option(f.flag, opts.values[f.key], f.help);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig resolve_config(const RunOptions& opts) {
  const std::string text = opts.config_file.empty() ? std::string{} : read_file(opts.config_file);
  RunConfig cfg = config_from_text(text);
  if (opts.given.at("problem")->count() > 0) {
    cfg = defaults_for(opts.values.at("problem"));
    apply_config_text(cfg, text);
  }
  for (const auto& f : kRunFlags) {
    if (opts.given.at(f.key)->count() > 0) apply_setting(cfg, f.key, opts.values.at(f.key));
  }
  if (!opts.write_config.empty()) write_output(opts.write_config, format_config(cfg));
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy analysis series solutions of psi-Caputo time-fractional PDEs"};
  app.require_subcommand(1);

  RunOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "M-th order HAM solution at the probe point vs reference");
  add_run_options(solve, solve_opts);

  RunOptions sweep_opts;
  std::string hbar_list;
  auto* hsweep = app.add_subcommand("hsweep", "one HAM curve per convergence-control value hbar");
  add_run_options(hsweep, sweep_opts);
  hsweep->add_option("--hbar-list", hbar_list, "comma separated hbar values")->required();

  RunOptions alpha_opts;
  std::string alpha_list;
  auto* alpha_table = app.add_subcommand("alpha-table", "reference solution for several orders alpha");
  add_run_options(alpha_table, alpha_opts);
  alpha_table->add_option("--alpha-list", alpha_list, "comma separated alpha values")->required();

  bool list_json = false;
  auto* list = app.add_subcommand("list", "list the built-in problems");
  list->add_flag("--json", list_json, "one JSON record per problem");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "hamfrac: " << e.what() << "\n\n" << app.help();
    return kExitConfig;
  }

  try {
    if (list->parsed()) {
      std::cout << cmd_list(list_json);
      return 0;
    }
    if (solve->parsed()) {
      const RunConfig cfg = resolve_config(solve_opts);
      write_output(cfg.output, cmd_solve(cfg).to_string());
    } else if (hsweep->parsed()) {
      const RunConfig cfg = resolve_config(sweep_opts);
      const auto hbars = parse_real_list(hbar_list);
      write_output(cfg.output, cmd_hsweep(cfg, hbars).to_string());
    } else if (alpha_table->parsed()) {
      const RunConfig cfg = resolve_config(alpha_opts);
      const auto alphas = parse_real_list(alpha_list);
      write_output(cfg.output, cmd_alpha_table(cfg, alphas).to_string());
    }
  } catch (const ConfigError& e) {
    std::cerr << "hamfrac: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const TruncationError& e) {
    std::cerr << "hamfrac: numerical failure: " << e.what() << " (last term " << e.last_term()
              << ")\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "hamfrac: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
