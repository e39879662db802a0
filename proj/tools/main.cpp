#include <iostream>
#include <string>
#include <vector>

#include "jumpq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto report = jumpq::execute(args, std::cerr);
  std::cout << report.output;
  return report.exit_code;
}
