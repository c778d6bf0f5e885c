#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "trifold/cli/run.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw trifold::cli::ConfigError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of type B three-fold supersymmetric systems"};
  std::string path;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<unsigned> max_jet;
  std::vector<std::string> checks;
  app.add_option("config", path, "JSON configuration file, or - for stdin")->required();
  app.add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--seed", seed, "Seed for randomized instances");
  app.add_option("--trials", trials, "Number of randomized instances")->check(CLI::Range(1, 1000));
  app.add_option("--check", checks, "Check to run (repeatable); overrides the config list");
  app.add_option("--max-jet-order", max_jet, "Jet budget of the frames")->check(CLI::Range(4, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    trifold::cli::RunConfig config = trifold::cli::parse_config(slurp(path));
    if (seed) config.seed = *seed;
    if (trials) config.trials = *trials;
    if (max_jet) {
      config.max_jet_order = *max_jet;
      trifold::cli::set_f(config, config.f_text);
    }
    if (!checks.empty()) {
      const auto& known = trifold::cli::known_checks();
      for (const auto& c : checks)
        if (std::find(known.begin(), known.end(), c) == known.end())
          throw trifold::cli::ConfigError("--check: unknown check \"" + c + "\"");
      config.checks = checks;
    }
    const auto report = trifold::cli::run(config);
    std::cout << trifold::cli::render(report, trifold::cli::parse_format(format));
    return report.exit_code();
  } catch (const trifold::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const trifold::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
