// coherentlab --config exp.toml [--override key=value]...

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coherentlab/error.hpp"
#include "coherentlab/experiment.hpp"
#include "json.hpp"

int main(int argc, char** argv) {
  CLI::App app{"coherentlab: lattice orbits of Bergman kernels on the disk"};
  std::string config_path;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "experiment config file (key = value)")->required();
  app.add_option("--override", overrides, "override a config key, e.g. --override alpha=[7,13]");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::ifstream in(config_path);
    if (!in) throw coherentlab::ValidationError("cannot read config '" + config_path + "'");
    std::stringstream text;
    text << in.rdbuf();
    coherentlab::ExperimentConfig config = coherentlab::parse_config(text.str());
    for (const auto& o : overrides) coherentlab::apply_override(config, o);
    return coherentlab::run(config, std::cout, std::cerr);
  } catch (const coherentlab::ValidationError& e) {
    std::cerr << nlohmann::json{{"error", "validation"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
}
