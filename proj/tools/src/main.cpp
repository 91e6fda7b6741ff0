#include <string>
#include <vector>

#include "polyknot_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyknot::cli::run(args);
}
