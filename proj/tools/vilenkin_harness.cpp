// Command line front end for the verification suites.
//
//   vilenkin_harness <subcommand> [--m SPEC] [--depth d] [--gauge SPEC] ...
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage, configuration
// or budget error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "vilenkin/experiments.hpp"
#include "vilenkin/gauge.hpp"

namespace {

constexpr int kChecksFailed = 1;
constexpr int kUsage = 2;

struct Flags {
  std::string modulus;
  std::size_t depth = 0;
  std::string gauge;
  std::string sweep = "dyadic";
  std::vector<double> p;
  std::vector<std::size_t> scales;
  std::size_t trials = 0;
  double A = 1.0;
  double c_prime = 1.0;
  std::size_t blocks = 2;
  std::uint64_t max_cells = std::uint64_t{1} << 22;
  std::uint64_t seed = 1;
  std::string out;
  std::string config;
};

// key=value lines; '#' starts a comment. Returns line-numbered errors.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(no) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

void add_options(CLI::App* sub, Flags& f) {
  sub->add_option("--m", f.modulus, "modulus sequence, e.g. 2,3,2,3 or 2^8 or [2,3]^5");
  sub->add_option("--depth", f.depth, "grid depth d (M_d cells per axis)");
  sub->add_option("--gauge", f.gauge, "gauge spec, e.g. exp-sqrt:A=1 or pow:1.5");
  sub->add_option("--sweep", f.sweep, "dyadic | ladder | diag | comma list of indices");
  sub->add_option("--p", f.p, "exponents")->delimiter(',');
  sub->add_option("--scales", f.scales, "scale indices")->delimiter(',');
  sub->add_option("--trials", f.trials, "number of random grids");
  sub->add_option("--A", f.A, "exponential gauge scale");
  sub->add_option("--c-prime", f.c_prime, "constant c' of the counterexample ladder");
  sub->add_option("--blocks", f.blocks, "number of counterexample blocks J");
  sub->add_option("--max-cells", f.max_cells, "cell budget M_d for the counterexample");
  sub->add_option("--seed", f.seed, "random seed");
  sub->add_option("--out", f.out, "CSV output path (default stdout)");
  sub->add_option("--config", f.config, "key=value file; flags given on the command line win");
}

// Fills options not given on the command line from the config file, by
// re-parsing them through CLI11 so validation stays in one place.
void apply_config(CLI::App* sub, const std::map<std::string, std::string>& values,
                  const std::set<std::string>& given) {
  std::vector<std::string> args;
  for (const auto& [key, value] : values) {
    const std::string name = "--" + key;
    if (sub->get_option_no_throw(name) == nullptr) {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    if (key == "config") throw std::invalid_argument("config: nested config files are not supported");
    if (given.count(name) > 0) continue;
    args.push_back(name);
    args.push_back(value);
  }
  if (args.empty()) return;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  sub->parse(reversed);
}

vilenkin::ExperimentConfig to_config(const std::string& name, bool depth_given, const Flags& f) {
  vilenkin::ExperimentConfig c;
  c.experiment = name;
  c.modulus = f.modulus;
  if (depth_given) c.depth = f.depth;
  c.gauge = f.gauge;
  c.sweep = f.sweep;
  c.p = f.p;
  c.scales = f.scales;
  c.trials = f.trials;
  c.A = f.A;
  c.c_prime = f.c_prime;
  c.blocks = f.blocks;
  c.max_cells = f.max_cells;
  c.seed = f.seed;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for Vilenkin-Fourier summability experiments"};
  app.require_subcommand(1);
  Flags flags;
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : vilenkin::experiment_names()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " suite");
    add_options(sub, flags);
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  std::string name;
  CLI::App* sub = nullptr;
  for (const auto& [n, s] : subs)
    if (s->parsed()) {
      name = n;
      sub = s;
    }

  try {
    // Option counts are reset by the next parse, so record the flags given
    // explicitly before applying the file.
    std::set<std::string> given;
    for (const auto* opt : sub->get_options())
      if (opt->count() > 0) given.insert(opt->get_name());
    if (!flags.config.empty()) apply_config(sub, read_config(flags.config), given);
    const bool depth_given = given.count("--depth") > 0 || sub->get_option("--depth")->count() > 0;
    const auto result = vilenkin::run_experiment(to_config(name, depth_given, flags));

    if (flags.out.empty()) {
      result.table.write(std::cout);
    } else {
      result.table.write_file(flags.out);
    }
    for (const auto& note : result.notes) std::cerr << "note: " << note << '\n';
    for (const auto& check : result.checks) {
      if (!check.passed) {
        std::cerr << "FAILED: " << check.name;
        if (!check.detail.empty()) std::cerr << " (" << check.detail << ")";
        std::cerr << '\n';
      }
    }
    std::ostream& summary = flags.out.empty() ? std::cerr : std::cout;
    summary << "summary," << name << ',' << result.passed() << ',' << result.checks.size() << '\n';
    return result.ok() ? 0 : kChecksFailed;
  } catch (const vilenkin::BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ParseError& e) {
    std::cerr << "config: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
