#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ayrep/groups.hpp"
#include "ayrep/representation.hpp"
#include "ayrep/tableau.hpp"

namespace ayrep {

/// Extension of the AY representation on B_{P,Q} to B_n. P is standard on
/// 1..k, Q on k+1..n (either may be empty). With h(pi,i) = c(pi(i+1)) - c(pi(i))
/// taken inside P or Q:
///   s_i, pi(i) and pi(i+1) on different sides:  C_pi -> C_{pi s_i}
///   otherwise                                   a = 1/h(pi,i), b as in the normalization
///   s_0                                         C_pi -> +C_pi if pi(1) <= k, else -C_pi
Representation extend_to_bn(const Tableau& P, const Tableau& Q, const GroupCaps& caps = GroupCaps::from_environment());
FloatRepresentation extend_to_bn_orthogonal(const Tableau& P, const Tableau& Q,
                                            const GroupCaps& caps = GroupCaps::from_environment());

/// A basis vector of the classical form: letters 1..n split between a
/// standard filling P of lambda and Q of mu (each increasing, on its letters).
struct BipartiteTableau {
  Tableau P;
  Tableau Q;
  friend bool operator==(const BipartiteTableau&, const BipartiteTableau&) = default;
  friend auto operator<=>(const BipartiteTableau&, const BipartiteTableau&) = default;
};

/// All (P, Q) of shape (lambda, mu), ordered by the letter set of P
/// (lexicographic) and then by the fillings.
std::vector<BipartiteTableau> bipartite_tableaux(const Partition& lambda, const Partition& mu);

/// Classical Young form of B_n on pairs (P, Q). s_0 is +1 when 1 is in P and
/// -1 otherwise; for i >= 1, letters in different tableaux are swapped with
/// coefficient 1 (h = infinity), otherwise h = c(i+1) - c(i) in the common
/// tableau. The seminormal variant takes b = 1 when i's box comes first in the
/// reading order (P row by row, then Q row by row) and 1 - 1/h^2 otherwise.
Representation bn_classical(const Partition& lambda, const Partition& mu);
FloatRepresentation bn_classical_orthogonal(const Partition& lambda, const Partition& mu);

/// Text label "1 2/3 | 4" of a pair, rows separated by '/'.
std::string bipartite_label(const BipartiteTableau& T);

/// (P, Q) relabelled by pi: every entry e replaced by pi^{-1}(e).
BipartiteTableau relabel(const BipartiteTableau& T, const Permutation& pi);

/// Row tableaux of lambda on 1..k and of mu on k+1..n, k = |lambda|.
BipartiteTableau row_pair(const Partition& lambda, const Partition& mu);

/// Compares extend_to_bn(PQ) with the classical form entrywise, matching the
/// basis vector C_tau to the pair PQ relabelled by tau. Returns a description
/// of the first difference, or nullopt when they agree.
std::optional<std::string> classical_mismatch(const Representation& ext, const Representation& cls,
                                              const BipartiteTableau& PQ);
std::optional<std::string> classical_mismatch(const FloatRepresentation& ext, const FloatRepresentation& cls,
                                              const BipartiteTableau& PQ, double tolerance = 1e-9);

/// Pairs of partitions (lambda, mu) with |lambda| + |mu| = n.
std::vector<std::pair<Partition, Partition>> bipartitions(int n);

}  // namespace ayrep
