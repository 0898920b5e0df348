#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ayrep/cells.hpp"
#include "ayrep/functional.hpp"
#include "ayrep/groups.hpp"
#include "ayrep/matrix.hpp"
#include "ayrep/rational.hpp"
#include "ayrep/tableau.hpp"

namespace ayrep {

/// How the off-diagonal coefficients are split. For a step w -> ws with
/// diagonal coefficient a = 1/<f, w alpha_s> at C_w:
///   Seminormal      up: b = 1,  down: b = 1 - a^2   (exact)
///   RowStochastic   b = 1 - a both ways, so a + b = 1 (exact)
///   OrthogonalFloat b = sqrt(1 - a^2) both ways     (double)
enum class Normalization { Seminormal, RowStochastic, OrthogonalFloat };

std::string to_string(Normalization n);
Normalization parse_normalization(std::string_view text);

/// Generator matrices of a Coxeter group representation. `generators[k]`
/// names the generator acting by `matrices[k]`; columns are images of basis
/// vectors. When the basis is indexed by group elements (an AY cell) they
/// are listed in `cell`.
template <class Scalar>
struct BasicRepresentation {
  CoxeterType type = CoxeterType::A;
  int n = 0;
  std::vector<int> generators;
  std::vector<Matrix<Scalar>> matrices;
  std::vector<std::string> basis_labels;
  std::vector<SignedPermutation> cell;
  Normalization normalization = Normalization::Seminormal;

  int dimension() const noexcept { return static_cast<int>(basis_labels.size()); }
  const Matrix<Scalar>& matrix_for(int generator) const {
    for (std::size_t k = 0; k < generators.size(); ++k)
      if (generators[k] == generator) return matrices[k];
    throw std::out_of_range("no matrix for generator s_" + std::to_string(generator));
  }
};

using Representation = BasicRepresentation<Rational>;
using FloatRepresentation = BasicRepresentation<double>;

/// rho^f_w on K^f_w with a_s(v) = 1/<f, v alpha_s>; boundary steps have b = 0.
/// Throws GenericityError naming the failed condition. `generators`
/// restricts to a parabolic subgroup (default: all of S_n), in which case the
/// cell is the descent class of w inside that subgroup.
Representation build_from_functional(const Functional& f, const Permutation& w,
                                     Normalization normalization = Normalization::Seminormal,
                                     std::optional<std::vector<int>> generators = std::nullopt,
                                     const GroupCaps& caps = GroupCaps::from_environment());
FloatRepresentation build_from_functional_orthogonal(const Functional& f, const Permutation& w,
                                                     std::optional<std::vector<int>> generators = std::nullopt,
                                                     const GroupCaps& caps = GroupCaps::from_environment());

/// Same construction on an explicitly given cell of the parabolic subgroup.
Representation build_on_cell(const Functional& f, const Cell& K, std::vector<int> generators, Normalization normalization);

/// Young's orthogonal form on standard tableaux of the shape:
/// s_i v_Q = (1/h) v_Q + sqrt(1 - 1/h^2) v_{Q^{s_i}}, h = c(i+1) - c(i).
FloatRepresentation build_orthogonal_skew(const SkewShape& shape);

/// Seminormal version on tableaux: b = 1 when i lies strictly north of
/// i+1 in Q, b = 1 - 1/h^2 when strictly south.
Representation build_seminormal_skew(const SkewShape& shape);

struct VerificationReport {
  bool ok = true;
  std::vector<std::string> failures;

  explicit operator bool() const noexcept { return ok; }
  void fail(std::string message) {
    ok = false;
    failures.push_back(std::move(message));
  }
};

/// M_s^2 = I and (M_s M_t)^{m(s,t)} = I for all generator pairs.
VerificationReport verify_coxeter(const Representation& rep);
VerificationReport verify_coxeter(const FloatRepresentation& rep, double tolerance = 1e-9);

/// Every rho_s(C_w) lies in span{C_w, C_ws}, with b = 0 when ws leaves the
/// cell, and the coefficients depend only on (w s w^{-1}, up or down).
VerificationReport verify_axiom_B(const Representation& rep);

/// The coefficients (a, b) of an AY step, keyed by reflection and direction.
struct AxiomBCoefficients {
  SignedPermutation reflection;
  bool up = true;
  Rational a;
  Rational b;
};
/// Throws DomainError if the representation violates Axiom (B).
std::vector<AxiomBCoefficients> axiom_B_coefficients(const Representation& rep);

/// Recovers an integer functional from a type-A representation on a cell
/// containing the identity: f_{i+1} - f_i = 1/a on the step id -> s_i, then
/// every reflection of T_K and T_dK is checked against 1/a_t. Throws
/// DomainError if no integer functional fits.
Functional extract_functional(const Representation& rep);

}  // namespace ayrep
