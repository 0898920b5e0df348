#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ayrep/functional.hpp"
#include "ayrep/groups.hpp"
#include "ayrep/permutation.hpp"
#include "ayrep/tableau.hpp"

namespace ayrep {

/// A subset of S_n with its interior reflections
/// T_K = {w s w^{-1} : w, ws in K} and boundary reflections
/// T_dK = {w s w^{-1} : w in K, ws not in K}.
struct Cell {
  std::vector<Permutation> members;
  /// Simple reflections s_k the cell is taken with respect to (all of S_n by default).
  std::vector<int> generators;
  std::vector<Reflection> interior;
  std::vector<Reflection> boundary;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(const Permutation& w) const;
  /// Position of w in members, or nullopt.
  std::optional<std::size_t> index_of(const Permutation& w) const;
};

/// Members are kept in the given order; reflection sets come out sorted.
Cell make_cell(std::vector<Permutation> members);
/// Interior and boundary taken over the given simple reflections only.
Cell make_cell(std::vector<Permutation> members, std::vector<int> generators);

/// A_f = {t : |<f, alpha_t>| = 1}.
std::vector<Reflection> boundary_reflections(const Functional& f);

/// K^f_w = {v : Des_A(v) = Des_A(w)} with A = A_f, in enumeration order.
Cell descent_cell(const Functional& f, const Permutation& w, const GroupCaps& caps = GroupCaps::from_environment());

/// Description of the first failed genericity condition, if any. Works for
/// any cell; condition (iii) compares <f, w alpha_s> and <f, w alpha_t>.
std::optional<std::string> genericity_violation(const Functional& f, const Cell& K);

/// K-genericity. Throws PreconditionError unless id in K and K is convex.
bool is_generic(const Functional& f, const Cell& K);

/// Every zero pairing <f, alpha_ij> = 0 is bracketed by indices
/// i < r1, r2 < j with <f, alpha_{i r1}> = 1 and <f, alpha_{i r2}> = -1.
bool is_generic_integer(const Functional& f);

/// pi -> Q^{pi^{-1}} over K^f_id. Requires derived(f) == derived(cont(Q)).
std::vector<std::pair<Permutation, Tableau>> cell_tableau_bijection(const Functional& f, const Tableau& Q,
                                                                    const GroupCaps& caps = GroupCaps::from_environment());

/// B_Q = {pi : Q^{pi^{-1}} standard}, computed by relabelling.
std::vector<Permutation> standard_relabellings(const Tableau& Q, const GroupCaps& caps = GroupCaps::from_environment());

struct MinimalCellWitness {
  Permutation sigma;
  Tableau tableau;
};

/// A witness (sigma, Q) with sigma^{-1} K = B_Q when K is a minimal AY cell.
/// For each sigma in K a content vector is reconstructed from the boundary
/// pattern of sigma^{-1} K by backtracking, then checked.
std::optional<MinimalCellWitness> minimal_ay_cell_witness(std::span<const Permutation> K,
                                                          const GroupCaps& caps = GroupCaps::from_environment());
bool is_minimal_ay_cell(std::span<const Permutation> K, const GroupCaps& caps = GroupCaps::from_environment());

/// An intersection of basic hyperplanes <f, alpha_t> = eps, eps = +-1.
class BasicFlat {
 public:
  /// Throws DomainError if the constraints have no common solution.
  BasicFlat(int n, std::vector<std::pair<Reflection, int>> constraints);

  int n() const noexcept { return n_; }
  const std::vector<std::pair<Reflection, int>>& constraints() const noexcept { return constraints_; }
  /// A_L: every t with <f, alpha_t> fixed to +-1 on the flat (implied ones included).
  std::vector<Reflection> reflections() const;
  bool contains(const Functional& f) const;

 private:
  int n_;
  std::vector<std::pair<Reflection, int>> constraints_;
  // Coordinates solved relative to a component root: f_i = f_root + offset.
  std::vector<int> root_;
  std::vector<long long> offset_;
};

/// The classes W_A^D = {w : Des_A(w) = D}, ordered by first member.
std::vector<Cell> flat_partition(const BasicFlat& L, const GroupCaps& caps = GroupCaps::from_environment());

}  // namespace ayrep
