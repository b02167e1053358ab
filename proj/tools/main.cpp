#include <string>
#include <vector>

#include "mhdlab/cli.hpp"

int main(int argc, char** argv) {
  return mhdlab::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
