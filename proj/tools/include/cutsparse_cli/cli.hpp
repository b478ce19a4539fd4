#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cutsparse/graph.hpp"
#include "cutsparse/io.hpp"

namespace cutsparse::cli {

enum class Command { sparsify, ni, lambda, verify, count_projections, bench };
enum class VerifyMode { off, exact, sampled };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;

struct RunConfig {
  Command command = Command::sparsify;
  std::string input;
  GraphFormat format = GraphFormat::edge_list;
  std::string scheme = "ni";
  double epsilon = 1.0;
  std::optional<double> alpha;
  std::optional<double> c0;
  std::uint64_t seed = 0;
  std::string output;      ///< empty: stdout
  std::string skeleton;    ///< verify: skeleton file to compare against input
  std::string provenance;  ///< sparsify: where to write it; verify: where to read it
  std::string report;      ///< sparsify: JSON report path (empty: stderr)
  VerifyMode verify = VerifyMode::off;
  std::size_t trials = 2000;
  unsigned threads = 1;
  std::string order = "scan";  ///< ni: scan | decreasing
  Weight k = 0;                ///< count-projections
  double projection_alpha = 1.0;
  int min_log = 16;            ///< bench: m from 2^min_log to 2^max_log
  int max_log = 19;
  int repeats = 3;
};

/// Executes one command. Exit codes: 0 success, 1 verification failure,
/// 2 usage or parameter error, 3 unreadable or malformed input and size
/// guard violations.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cutsparse::cli
