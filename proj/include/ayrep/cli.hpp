#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ayrep/groups.hpp"
#include "ayrep/representation.hpp"

namespace ayrep {

enum class OutputFormat { Text, Json, Dot };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;  // cell, syt, rep, induce, bn, tops, verify
  int n = 0;  // 0: inferred from the functional or shape where possible
  CoxeterType type = CoxeterType::A;
  std::optional<std::string> functional;  // "0,2,-1"
  std::optional<std::string> base;        // base element w, one-line
  std::optional<std::string> shape;       // "3,2" or "3,3,1/3,1"
  std::optional<std::string> content;     // content vector for syt
  std::string lambda;                     // bn: partition for P
  std::string mu;                         // bn: partition for Q
  std::vector<int> parabolic;             // induce: J
  std::vector<std::string> block_shapes;  // induce: one partition per block
  Normalization normalization = Normalization::Seminormal;
  OutputFormat format = OutputFormat::Text;
  std::vector<std::string> suites;
  GroupCaps caps = GroupCaps::from_environment();
  std::uint64_t seed = 1;
  int samples = 3;
};

/// Runs one subcommand. Returns kExitOk when every check passes,
/// kExitCheckFailed when some check fails and kExitUsage on bad input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) into a RunConfig and runs it.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ayrep
