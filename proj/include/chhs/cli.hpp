#pragma once

#include <string>
#include <vector>

namespace chhs {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command. args excludes the program name; stdin_text stands in for
/// standard input when --input is omitted. Exit codes: 0 success or PASS,
/// 1 FAIL verdict, 2 input error.
CliResult run(const std::vector<std::string>& args, const std::string& stdin_text = "");

}  // namespace chhs
