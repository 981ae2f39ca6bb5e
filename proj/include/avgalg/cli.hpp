#pragma once

#include <string>
#include <vector>

#include "avgalg/serialize.hpp"

namespace avgalg::cli {

enum ExitCode { Ok = 0, Usage = 1, InputError = 2, BudgetError = 3, InvariantFailure = 4 };

struct CommandResult {
  int exit_code = Ok;
  Json payload;
  // Replaces the JSON payload on stdout for --format csv/text and --help.
  std::string text;
  std::string diagnostics;
  bool ok() const { return exit_code == Ok; }
  // What the command writes to stdout.
  std::string stdout_text() const;
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

// Worker threads from AVGALG_THREADS, default 1.
unsigned thread_count();

}  // namespace avgalg::cli
