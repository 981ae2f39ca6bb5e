#include <iostream>
#include <string>
#include <vector>

#include "avgalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const avgalg::cli::CommandResult r = avgalg::cli::run(args);
  std::cout << r.stdout_text();
  if (!r.diagnostics.empty()) {
    std::cerr << r.diagnostics;
    if (r.diagnostics.back() != '\n') std::cerr << '\n';
  }
  return r.exit_code;
}
