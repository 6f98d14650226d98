#pragma once
// Command dispatch for the `lindiff` front end.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lindiff/cli/problem.hpp"

namespace lindiff::cli {

enum class Command { charset, dimpoly, decompose, tangent, reduce, count };
enum class Format { text, json };

namespace exit_codes {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int parse_error = 2;
inline constexpr int not_on_variety = 3;
inline constexpr int unsupported = 4;
}  // namespace exit_codes

struct Options {
  Format format = Format::text;
  /// Overrides the `ranking:` section.
  std::optional<RankingKind> ranking;
  /// Also list a K-basis of M_k (or the staircase count at k for `count`).
  std::optional<std::uint32_t> order_bound;
};

struct CommandResult {
  int exit_code = exit_codes::ok;
  std::string out;
  std::string err;
};

std::optional<Command> command_from_name(std::string_view name);
std::string_view command_name(Command cmd);

CommandResult run_command(Command cmd, const ProblemFile& file, const Options& opts);
/// Parses `text` first; parse errors give exit code 2.
CommandResult run_command(Command cmd, std::string_view text, const Options& opts);

}  // namespace lindiff::cli
