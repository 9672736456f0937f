/// Shared fixtures and helpers for the test suite.

#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "hobo/hobo.hpp"

namespace testsup {

/// Cubic toy instance: -10*x0 + 7*x1 + x0*x1 - 4*x0*x2 + 8*x1*x2 - x0*x1*x2.
/// Its unique minimum is -14 at assignment 101.
inline hobo::Polynomial cubic3() {
  std::vector<hobo::Term> terms = {
      {{0}, -10.0},   {{1}, 7.0},    {{0, 1}, 1.0},
      {{0, 2}, -4.0}, {{1, 2}, 8.0}, {{0, 1, 2}, -1.0},
  };
  return hobo::Polynomial::from_terms(3, terms, 0.0);
}

/// The same instance in .hobo text form.
inline std::string cubic3_text() {
  return "vars 3\n-10 x0\n7 x1\n1 x0 x1\n-4 x0 x2\n8 x1 x2\n-1 x0 x1 x2\n";
}

/// Writes `contents` to a uniquely named file in the temp directory and
/// returns its path.
inline std::string write_temp(const std::string& name,
                              const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot create temp file " + path.string());
  out << contents;
  return path.string();
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  ///< captured stdout
};

/// Runs a shell command and captures its stdout and exit code. Redirect
/// stderr inside `cmd` (e.g. `2>/dev/null` or `2>&1`) as needed.
inline CommandResult run_command(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CommandResult result;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace testsup
