#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "neutro/io.hpp"

namespace neutro::cli {

enum class Command { deca, penta, entropy, grid, prototypes, check };

struct Config {
  Command command = Command::deca;
  Variant variant = Variant::I;
  std::optional<std::filesystem::path> input_path;   // stdin when absent
  std::optional<std::filesystem::path> output_path;  // stdout when absent
  io::Format format = io::Format::csv;
  double step = 0.05;        // grid, check
  double tolerance = 1e-12;  // check
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;        // bad input, flags, or I/O
inline constexpr int kExitInvariant = 2;    // check found a violation
inline constexpr int kExitUnsupported = 3;  // operation undefined for the variant

// Executes one command. `in`/`out` stand in for stdin/stdout unless the config
// names files; diagnostics and warnings go to `err`. Never throws: failures
// map onto the exit codes above.
int run(const Config& config, std::istream& in, std::ostream& out, std::ostream& err);

// Exit code for an error escaping a command (exposed for tests).
int exit_code_for(const std::exception& e) noexcept;

}  // namespace neutro::cli
