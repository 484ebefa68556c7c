#ifndef HAMWIT_TESTS_RUN_CLI_HPP
#define HAMWIT_TESTS_RUN_CLI_HPP

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace cli {

struct Result {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

// Runs the built CLI binary with the given argument string.
inline Result run(const std::string& args) {
  const std::string command = std::string(HAMWIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
  Result result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string read_golden(const std::string& name) {
  const std::string path = std::string(HAMWIT_GOLDEN_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open golden file " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace cli

#endif  // HAMWIT_TESTS_RUN_CLI_HPP
