#include <iostream>
#include <string>
#include <vector>

#include "tcbounds/cli.hpp"

// Exit codes: 0 success, 1 usage or malformed input, 2 verification failure,
// 3 resource cap exceeded.
int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tcb::run_cli(args, std::cout, std::cerr);
}
