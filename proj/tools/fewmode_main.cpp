#include <iostream>
#include <string>
#include <vector>

#include "fewmode/cli/run_config.hpp"
#include "fewmode/cli/runner.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  fewmode::cli::RunConfig config;
  try {
    config = fewmode::cli::parse_and_validate(args);
  } catch (const fewmode::cli::HelpRequested& help) {
    std::cout << help.what();
    return 0;
  } catch (const fewmode::cli::ConfigError& e) {
    std::cerr << "fewmode: invalid " << e.what() << '\n';
    return 1;
  } catch (const fewmode::Error& e) {
    std::cerr << "fewmode: " << e.what() << '\n';
    return 1;
  }
  return fewmode::cli::run(config, std::cout, std::cerr);
}
