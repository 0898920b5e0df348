#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ayrep/groups.hpp"
#include "ayrep/permutation.hpp"
#include "ayrep/tableau.hpp"

namespace ayrep {

/// Elements w of K with no ws (s simple, l(ws) > l(w)) in K. For convex K
/// these are the maximal elements in right weak order.
std::vector<Permutation> weak_maximal(std::span<const Permutation> K);

struct TopWitness {
  Permutation sigma;  // sigma^{-1} [id, pi] = B_Q
  Tableau tableau;    // straight shape
  bool irreducible = false;
};

/// Searches sigma in [id, pi] and standard Q of straight shape with
/// sigma^{-1} [id, pi] = {tau : relabel(Q, tau) standard}; the representation
/// built on [id, pi] from Q is then tested for irreducibility by its exact
/// character norm. Returns the first witness whose representation is irreducible.
std::optional<TopWitness> top_witness(const Permutation& pi, const GroupCaps& caps = GroupCaps::from_environment());
bool is_top_brute(const Permutation& pi, const GroupCaps& caps = GroupCaps::from_environment());

/// Per-shape data for the closed-form candidates.
struct TopShapeRow {
  Partition shape;
  Tableau row_tableau;
  Permutation sigma_down;  // column word read top to bottom
  Permutation sigma_up;    // column word read bottom to top
  std::optional<Permutation> b_max;  // unique maximum of B_R, if any
  std::size_t b_size = 0;            // |B_R| = #SYT(shape)
  bool b_is_interval = false;        // B_R = [id, b_max]
  bool max_gives_column_tableau = false;
  bool down_certified = false;
  bool up_certified = false;
};

struct TopElement {
  Permutation element;
  TopWitness witness;
  std::size_t interval_size = 0;
};

struct TopReport {
  int n = 0;
  long long partition_count = 0;
  std::vector<TopShapeRow> rows;
  std::vector<TopElement> oracle;  // sorted by element
  std::vector<Permutation> candidates_down;
  std::vector<Permutation> candidates_up;
  bool down_matches_oracle = false;
  bool up_matches_oracle = false;
  std::vector<std::string> discrepancies;
};

/// Oracle sweep over S_n compared with the column-word candidates.
TopReport top_elements(int n, const GroupCaps& caps = GroupCaps::from_environment());

}  // namespace ayrep
