#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace entalg::cli {

// Exit statuses of the batch front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct GlobalOptions {
  uint64_t seed = 0;  // overwritten by the default in run()
  std::optional<double> tol;
  double level = 0.01;
  bool exploration = false;
  std::string format = "json";  // "json" | "csv"
};

struct CommandOutcome {
  int exit_code = kExitPass;
  nlohmann::json* ignore = nullptr;  // unused; keeps the struct aggregate
  std::string rendered;              // serialized output (JSON or CSV)
};

// Dispatches one subcommand on a parsed JSON input. Input errors come back
// as kExitInputError with a diagnostic; failed checks as kExitCheckFailed.
CommandOutcome run(const std::string& subcommand, const nlohmann::json& input,
                   const GlobalOptions& opt);

// Convenience wrapper: parses `text` as JSON first (exit 2 on parse errors).
CommandOutcome run_text(const std::string& subcommand, const std::string& text,
                        const GlobalOptions& opt);

}  // namespace entalg::cli
