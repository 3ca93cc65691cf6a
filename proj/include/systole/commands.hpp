#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "systole/triple.hpp"

namespace systole {

enum ExitCode { kExitOk = 0, kExitUsage = 2, kExitUnsupported = 3, kExitResource = 4 };

struct RunConfig {
  std::string command;  // info | primes | sysbound | table
  Triple tau{0, 0, 0};
  std::optional<std::int64_t> p;
  std::optional<int> which;
  std::optional<std::string> ideal;
  std::uint64_t max_norm = 50;
  std::uint64_t seed = 0x5eed5eedULL;
  int threads = 1;
  int precision_bits = 128;
  std::string format = "pretty";  // json | csv | pretty
  std::string dump_generators;
  bool timing = false;
  bool composites = true;
  bool show_skipped = false;
};

// Runs one command; all output goes to out, diagnostics to err. Returns an ExitCode.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace systole
