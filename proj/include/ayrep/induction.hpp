#pragma once

#include <vector>

#include "ayrep/character.hpp"
#include "ayrep/groups.hpp"
#include "ayrep/representation.hpp"
#include "ayrep/tableau.hpp"

namespace ayrep {

/// Induces psi, a representation of the parabolic subgroup <J> (J =
/// psi.generators) on the cell D = psi.cell, up to S_n. The basis is
/// {m r : m in D, r in W^J}, ordered by r then m. For s simple:
///   rs in W^J:        rho_s(C_{mr}) = C_{mrs}
///   rs = p r, p in J: rho_s(C_{mr}) = sum_m' psi_p(m', m) C_{m'r}
/// For an AY cell psi_p has the two-term form a_p(m) C_m + b_p(m) C_{mp}.
/// Throws DomainError if psi fails Axiom (B) or is not of type A.
Representation induce(const Representation& psi, const GroupCaps& caps = GroupCaps::from_environment());

/// Classical induction chi(g) = (1/|H|) sum_{x in G, x g x^{-1} in H} psi(x g x^{-1}),
/// with psi given by its values on the elements of H = <J> in the
/// enumeration order of enumerate_parabolic(A, n, J).
Character classical_induced_character(int n, const std::vector<int>& J, const std::vector<Rational>& psi_values,
                                      const ConjugacyClasses& classes, const GroupCaps& caps = GroupCaps::from_environment());

/// Maximal runs of consecutive letters joined by generators in J, e.g.
/// n = 5, J = {1,3,4} gives {1,2}, {3,4,5}.
std::vector<std::vector<int>> parabolic_blocks(int n, const std::vector<int>& J);

/// Product of Murnaghan-Nakayama characters of one straight shape per block,
/// evaluated on every element of <J>. The oracle for the outer tensor
/// product of Specht modules.
std::vector<Rational> block_product_values(int n, const std::vector<int>& J, const std::vector<Partition>& shapes,
                                           const GroupCaps& caps = GroupCaps::from_environment());

/// The AY representation of <J> carried by the row tableaux of one straight
/// shape per block (a functional with content-vector blocks).
Representation block_specht(int n, const std::vector<int>& J, const std::vector<Partition>& shapes,
                            const GroupCaps& caps = GroupCaps::from_environment());

/// B_{P,Q} = B_P B_Q Omega_{k,n}, where P is standard on 1..k and Q is
/// standard on k+1..n; Omega_{k,n} = W^J for J = S \ {s_k}. Sorted.
std::vector<Permutation> shuffle_cell(const Tableau& P, const Tableau& Q,
                                      const GroupCaps& caps = GroupCaps::from_environment());

}  // namespace ayrep
