#include <string>
#include <vector>

#include "bcmas/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bcmas::cli::run(args);
}
