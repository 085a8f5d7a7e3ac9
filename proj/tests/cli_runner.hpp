#pragma once

#include <array>
#include <cstdio>
#include <memory>
#include <string>

namespace phm::testing {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

/// Runs the built CLI with the given argument string.
inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PHM_CLI_PATH) + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  CliResult res;
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
    res.output.append(buf.data(), n);
  FILE* raw = pipe.release();
  const int status = pclose(raw);
  res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace phm::testing
