#include <iostream>
#include <string>
#include <vector>

#include "upf/commands.hpp"

int main(int argc, char** argv) {
  return upf::cli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
