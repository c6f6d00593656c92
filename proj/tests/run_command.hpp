#pragma once
// Runs a shell command, capturing stdout and the exit status.

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

struct CommandResult {
  int status = -1;
  std::string out;
};

inline CommandResult run_command(const std::string& cmd) {
  CommandResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

inline std::string cli(const std::string& args) { return std::string(KRONSTAB_CLI) + " " + args; }
inline std::string faulty_cli(const std::string& args) { return std::string(KRONSTAB_FAULTY_CLI) + " " + args; }
