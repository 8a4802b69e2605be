#pragma once

// Command dispatch behind the zetaforge executable.

#include <optional>
#include <string>

#include <json.hpp>

namespace zetaforge {

struct Command {
  /// zeta | ord | value | verify-c | verify-vo | trace-check | ell-check |
  /// p-check | det | batch
  std::string verb;
  /// Expression source, or the complex file for det.
  std::string target;
  std::optional<long> n;
  long precision = 50;
  /// "text" or "json".
  std::string format = "text";
  long series_order = 10;
  std::optional<long> ell;
  /// Inline Hodge JSON for `ord --hodge`.
  std::optional<std::string> hodge;
  std::optional<std::string> manifest;
};

/// 50, or ZETAFORGE_PRECISION when set to a positive integer.
long default_precision();

struct Outcome {
  nlohmann::json report;
  /// 0 when every verdict passes, 1 when some verdict fails, 2 on error.
  int exit_code = 0;

  /// The report as JSON or as indented "key: value" text.
  std::string render(const std::string& format) const;
};

Outcome run(const Command& cmd);

}  // namespace zetaforge
