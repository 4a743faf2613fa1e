#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "chhs/cli.hpp"

namespace {

bool reads_stdin(const std::vector<std::string>& args) {
  if (!args.empty() && (args[0] == "gen" || args[0] == "--help" || args[0] == "-h")) return false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--input" && i + 1 < args.size() && args[i + 1] != "-") return false;
    if (args[i].rfind("--input=", 0) == 0 && args[i] != "--input=-") return false;
    if (args[i] == "--help" || args[i] == "-h") return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string input;
  if (reads_stdin(args)) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    input = ss.str();
  }
  const chhs::CliResult r = chhs::run(args, input);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
