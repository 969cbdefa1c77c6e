#include <string>
#include <vector>

#include "syzygy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return syzygy::emit_result(syzygy::run_command(args));
}
