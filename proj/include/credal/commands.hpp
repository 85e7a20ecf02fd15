#pragma once

// Command dispatch behind the CLI and the C API.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credal/model.hpp"

namespace credal {

enum class OutputFormat { Text, Json, Csv };

enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitCapacity = 3, kExitUsage = 64, kExitInternal = 70 };

struct CommandOptions {
  std::optional<std::string> gamble;
  std::optional<std::string> poly;
  std::optional<std::string> h;      // expression text or a name from "exprs"
  std::optional<std::string> theta;  // "a=1/3,b=2/3"
  std::optional<unsigned> n;
  std::optional<std::string> ns;     // "1..8", "2,4,8" or a mix
  OutputFormat format = OutputFormat::Text;
  std::size_t cap = kDefaultEnumerationCap;
};

struct CommandOutput {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

const std::vector<std::string>& command_names();
bool is_command(std::string_view name);
std::string usage_text();

/// Parses "1..8", "2,4,8" or "1..4,8,16" into an ordered list.
std::vector<unsigned> parse_range(std::string_view text);

/// Runs one command. Never throws: errors map to exit codes.
CommandOutput dispatch(std::string_view command, const ModelDocument& doc,
                       const CommandOptions& options);

}  // namespace credal
