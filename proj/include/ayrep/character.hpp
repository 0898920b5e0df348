#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ayrep/groups.hpp"
#include "ayrep/rational.hpp"
#include "ayrep/representation.hpp"
#include "ayrep/tableau.hpp"

namespace ayrep {

/// Conjugacy classes of S_n (by cycle type) or B_n (by brute-force orbits).
/// Class 0 is always the identity.
struct ConjugacyClasses {
  CoxeterType type = CoxeterType::A;
  int n = 0;
  long long group_order = 0;
  std::vector<SignedPermutation> representatives;
  std::vector<std::vector<int>> words;  // a reduced word for each representative
  std::vector<long long> sizes;
  std::vector<std::string> labels;
  /// Cycle type of each class (type A only).
  std::vector<Partition> cycle_types;

  std::size_t size() const noexcept { return representatives.size(); }
  std::size_t class_of(const SignedPermutation& w) const;

 private:
  friend ConjugacyClasses conjugacy_classes(CoxeterType, int, const GroupCaps&);
  std::map<SignedPermutation, std::size_t> lookup_;
};

ConjugacyClasses conjugacy_classes(CoxeterType type, int n, const GroupCaps& caps = GroupCaps::from_environment());

/// Cycle type of a permutation, parts in decreasing order.
Partition cycle_type(const Permutation& w);
/// Signed cycle type of an element of B_n as "pos|neg", e.g. "2,1|1".
std::string signed_cycle_type(const SignedPermutation& w);

struct Character {
  CoxeterType type = CoxeterType::A;
  int n = 0;
  std::vector<Rational> values;  // indexed like ConjugacyClasses

  const Rational& at(std::size_t class_index) const { return values.at(class_index); }
  friend bool operator==(const Character&, const Character&) = default;
};

/// Trace of rho along a word of generators.
Rational trace_of_word(const Representation& rep, const std::vector<int>& word);

/// Character on class representatives. All Coxeter generators must act.
Character character(const Representation& rep, const ConjugacyClasses& classes);
Character character(const Representation& rep, const GroupCaps& caps = GroupCaps::from_environment());

/// Traces of every element of the group generated by rep.generators, in
/// enumeration order of that (parabolic) subgroup.
std::vector<Rational> element_traces(const Representation& rep, const GroupCaps& caps = GroupCaps::from_environment());
std::vector<double> element_traces(const FloatRepresentation& rep, const GroupCaps& caps = GroupCaps::from_environment());

/// (1/|W|) sum_w chi1(w) chi2(w), summed class by class.
Rational char_inner(const Character& a, const Character& b, const ConjugacyClasses& classes);

bool is_irreducible(const Representation& rep, const GroupCaps& caps = GroupCaps::from_environment());

/// chi^{lambda/mu}(cycle type) by the skew Murnaghan-Nakayama rule.
long long mn_character(const SkewShape& shape, const Partition& cycle_type);

/// mn_character on every class of S_n.
Character mn_class_function(const SkewShape& shape, const ConjugacyClasses& classes);

}  // namespace ayrep
