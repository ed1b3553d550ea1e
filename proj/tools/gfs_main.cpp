#include <string>
#include <vector>

#include "gfs/cli.hpp"

int main(int argc, char** argv) {
  return gfs::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
