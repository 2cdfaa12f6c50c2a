#ifndef ECOL_CLI_HPP
#define ECOL_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecol/overfull.hpp"

namespace ecol::cli {

enum class OutputFormat { Text, Records };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  /// Lemma name, theorem1, conjecture or all; verify only.
  std::string target;
  /// File path, built-in graph key, or "-" for stdin.
  std::string input = "-";
  std::uint64_t seed = 0;
  std::size_t budget = 200;
  std::size_t exhaustive_limit = 5000;
  int cap = kDefaultSubgraphCap;
  OutputFormat format = OutputFormat::Text;
  unsigned jobs = 1;
  std::optional<std::pair<int, int>> edge;
  std::size_t max_path_edges = 3;
  bool timing = false;
};

const std::vector<std::string>& commands();

/// Runs one command. Diagnostics go to err as a single line.
int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and calls run.
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ecol::cli

#endif  // ECOL_CLI_HPP
