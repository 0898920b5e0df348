#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ayrep/groups.hpp"

namespace ayrep {

/// Outcome of one verification sweep. Failures carry the counterexample.
struct SuiteResult {
  std::string name;
  long long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const noexcept { return failures.empty(); }
};

struct SweepOptions {
  int n = 3;
  std::uint64_t seed = 1;
  /// Functionals sampled per flat, and shapes sampled when a sweep is too large.
  int samples = 3;
  GroupCaps caps = GroupCaps::from_environment();
};

/// coxeter, axiomB, flat, specht, cells, regular, convex, generic,
/// minimal, induction, bn, tops.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
SuiteResult run_suite(std::string_view name, const SweepOptions& options);

}  // namespace ayrep
