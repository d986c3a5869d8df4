#pragma once

// Command-line front end: solve, batch, check and cardano subcommands.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicdio/solver.hpp"

namespace cubicdio::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kHypothesisViolation = 2,
  kBudgetExhausted = 3,
};

struct Instance {
  std::string name;
  std::string p_text;
  std::string q_text;
  Poly p;
  Poly q;
  std::optional<std::int64_t> bound;
  std::optional<SearchMode> mode;
};

class InstanceFileError : public std::runtime_error {
 public:
  InstanceFileError(std::optional<std::size_t> record, const std::string& what)
      : std::runtime_error(what), record_(record) {}
  /// 0-based index of the offending record, when one is to blame.
  std::optional<std::size_t> record() const noexcept { return record_; }

 private:
  std::optional<std::size_t> record_;
};

/// Parses `[{"name": ..., "p": "...", "q": "...", "bound": N, "mode": "..."}]`.
std::vector<Instance> load_instances(const std::string& json_text);

/// Runs the CLI on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubicdio::cli
