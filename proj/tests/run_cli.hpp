#pragma once

// Minimal process runner for tests that drive the installed CLI binary.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace testrun {

struct Result {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

// Runs `command` through the shell with stderr folded into stdout.
inline Result run(const std::string& command) {
  Result r;
  std::string full = command + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

inline long count_lines(const std::string& s) {
  long n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

inline bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace testrun
