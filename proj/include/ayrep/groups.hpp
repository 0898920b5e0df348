#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ayrep/functional.hpp"
#include "ayrep/permutation.hpp"

namespace ayrep {

enum class CoxeterType { A, B };

/// Size caps for explicit group enumeration. AYREP_MAX_N overrides both.
struct GroupCaps {
  int max_n_a = 7;
  int max_n_b = 5;

  static GroupCaps from_environment();
  int cap_for(CoxeterType type) const { return type == CoxeterType::A ? max_n_a : max_n_b; }
};

/// Coxeter generators of the rank-n group: 1..n-1 for A (S_n), 0..n-1 for B.
std::vector<int> coxeter_generators(CoxeterType type, int n);

/// Order of s t for generators s, t (1 when s == t).
int coxeter_m(CoxeterType type, int s, int t);

/// Breadth-first closure of the identity under right multiplication by the
/// chosen generators. Each element records the BFS parent and the generator
/// that reached it, so words[k] is a reduced word.
struct GroupListing {
  CoxeterType type = CoxeterType::A;
  int n = 0;
  std::vector<int> generators;
  std::vector<SignedPermutation> elements;
  std::vector<std::vector<int>> words;
  std::vector<std::ptrdiff_t> parent;
  std::vector<int> last_generator;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> find(const SignedPermutation& w) const;
  std::size_t index_of(const SignedPermutation& w) const;  // throws if absent
  std::vector<std::vector<std::size_t>> children() const;

 private:
  friend GroupListing enumerate_parabolic(CoxeterType, int, std::vector<int>, const GroupCaps&);
  std::map<SignedPermutation, std::size_t> index_;
};

/// All n! (type A) or 2^n n! (type B) elements. Throws SizeLimitError above the cap.
GroupListing enumerate_group(CoxeterType type, int n, const GroupCaps& caps = GroupCaps::from_environment());

/// The parabolic subgroup generated by `generators`.
GroupListing enumerate_parabolic(CoxeterType type, int n, std::vector<int> generators,
                                 const GroupCaps& caps = GroupCaps::from_environment());

/// S_n in enumeration order.
std::vector<Permutation> symmetric_group(int n, const GroupCaps& caps = GroupCaps::from_environment());

/// Right weak order interval [id, w] = {u : l(u) + l(u^{-1} w) = l(w)},
/// generated by stripping right descents. Sorted by (length, one-line word).
std::vector<Permutation> weak_interval(const Permutation& w);

/// Geodesic convexity in the right Cayley graph. Computed as the test
/// K == intersection of the reflection half-spaces containing K.
bool is_convex(std::span<const Permutation> K);

/// W^J = {w : no left descent s_j with j in J}; minimal length
/// representatives of the right cosets <J> w. Enumeration order.
std::vector<Permutation> minimal_coset_reps(int n, std::span<const int> J,
                                            const GroupCaps& caps = GroupCaps::from_environment());

}  // namespace ayrep
