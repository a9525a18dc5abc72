#pragma once

#include "grossone/gross_linear.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace grossone {

struct OutputOptions {
  bool json = false;
  FormatOptions format;
};

enum ExitStatus : int { kOk = 0, kArithmeticError = 1, kSyntaxError = 2 };

struct CommandOutcome {
  ExitStatus status = kOk;
  std::string text;  // result, or the rendered diagnostic when status != kOk
};

/// Runs one REPL line. Commands are words followed by expressions:
///   compare A B | approx E at M | carpet K N | sponge K N | cantor K N
///   reach S | countable E | distinguish F K1 N1 K2 N2
/// Arguments may be separated by commas. Anything else is evaluated as an
/// expression.
CommandOutcome execute_command(std::string_view line, const OutputOptions& opts);

/// Runs every line independently (in parallel) and returns outcomes in
/// input order.
std::vector<CommandOutcome> execute_batch(const std::vector<std::string>& lines,
                                          const OutputOptions& opts);

/// Interactive loop until EOF, "quit" or "exit".
void run_repl(std::istream& in, std::ostream& out, const OutputOptions& opts, bool prompt);

/// Entry point for the grosscalc executable.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace grossone
