#include <string>
#include <vector>

#include "gevrey/cli.hpp"

int main(int argc, char** argv) {
  return gevrey::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
