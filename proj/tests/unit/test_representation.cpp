#include <doctest.h>

#include <cmath>

#include "ayrep/character.hpp"
#include "ayrep/error.hpp"
#include "ayrep/representation.hpp"
#include "oracles.hpp"

using namespace ayrep;

namespace {

Rational q(long p, long d = 1) { return ratio(p, d); }

}  // namespace

TEST_SUITE("representation") {
  TEST_CASE("matrices for f = (0,1,-1)") {
    const Representation rep = build_from_functional(Functional({0, 1, -1}), Permutation::identity(3));
    REQUIRE(rep.dimension() == 2);
    CHECK(rep.basis_labels == std::vector<std::string>{"1,2,3", "1,3,2"});
    const auto& s1 = rep.matrix_for(1);
    CHECK(s1(0, 0) == q(1));
    CHECK(s1(1, 1) == q(-1));
    CHECK(s1(0, 1) == q(0));
    const auto& s2 = rep.matrix_for(2);
    // Columns are images: rho(s2) C_id = -1/2 C_id + C_{s2}.
    CHECK(s2(0, 0) == q(-1, 2));
    CHECK(s2(1, 0) == q(1));
    CHECK(s2(0, 1) == q(3, 4));
    CHECK(s2(1, 1) == q(1, 2));
    CHECK(oracle::coxeter_relations_hold(rep));
  }

  TEST_CASE("normalizations") {
    const Functional f({0, 1, 2, -1, 0});
    const Representation semi = build_from_functional(f, Permutation::identity(5));
    const Representation stoch = build_from_functional(f, Permutation::identity(5), Normalization::RowStochastic);
    const FloatRepresentation orth = build_from_functional_orthogonal(f, Permutation::identity(5));
    CHECK(oracle::coxeter_relations_hold(semi));
    CHECK(oracle::coxeter_relations_hold(stoch));
    CHECK(verify_coxeter(orth));
    // Row-stochastic: a + b = 1 on interior steps; boundary steps send C_w to +-C_w.
    for (const auto& M : stoch.matrices)
      for (int c = 0; c < M.cols(); ++c) {
        Rational sum = 0;
        for (int r = 0; r < M.rows(); ++r) sum += M(r, c);
        if (M(c, c) * M(c, c) == q(1))
          CHECK(sum == M(c, c));
        else
          CHECK(sum == q(1));
      }
    // Orthogonal: M M^T = I.
    for (const auto& M : orth.matrices)
      for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.rows(); ++j) {
          double s = 0;
          for (int k = 0; k < M.cols(); ++k) s += M(i, k) * M(j, k);
          CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) < 1e-12);
        }
    // All three have the same character.
    const auto classes = conjugacy_classes(CoxeterType::A, 5);
    CHECK(character(semi, classes) == character(stoch, classes));
    CHECK(parse_normalization("row-stochastic") == Normalization::RowStochastic);
    CHECK_THROWS_AS(parse_normalization("banana"), DomainError);
    CHECK_THROWS_AS(build_from_functional(f, Permutation::identity(5), Normalization::OrthogonalFloat), DomainError);
  }

  TEST_CASE("non-generic functionals are rejected") {
    CHECK_THROWS_AS(build_from_functional(Functional({0, 0, 3}), Permutation::identity(3)), GenericityError);
  }

  TEST_CASE("Young forms on every skew shape up to 5 boxes") {
    for (int n = 1; n <= 5; ++n)
      for (const SkewShape& shape : skew_shapes(n)) {
        const Representation rep = build_seminormal_skew(shape);
        CHECK(rep.dimension() == static_cast<int>(oracle::standard_fillings(shape.lambda(), shape.mu()).size()));
        CHECK(oracle::coxeter_relations_hold(rep));
        CHECK(verify_coxeter(build_orthogonal_skew(shape), 1e-9));
        // Same character as the cell construction from the row tableau.
        const auto cell_rep = build_from_functional(Functional(content_vector(row_tableau(shape))), Permutation::identity(n));
        CHECK(oracle::all_traces(rep) == oracle::all_traces(cell_rep));
      }
  }

  TEST_CASE("axiom B holds for cell representations and detects tampering") {
    Representation rep = build_from_functional(Functional({0, 1, 2, -1}), Permutation::identity(4));
    CHECK(verify_axiom_B(rep));
    const auto coeffs = axiom_B_coefficients(rep);
    CHECK_FALSE(coeffs.empty());
    // a = +-1 exactly on boundary steps, where b vanishes.
    for (const auto& c : coeffs) CHECK((c.a * c.a == q(1)) == (c.b == q(0)));
    // An entry outside span{C_w, C_ws}.
    rep.matrices[0](rep.dimension() - 1, 0) += q(1);
    CHECK_FALSE(verify_axiom_B(rep));
    CHECK_THROWS_AS(axiom_B_coefficients(rep), DomainError);
  }

  TEST_CASE("functional extraction inverts the construction") {
    for (const std::vector<long long> v :
         {std::vector<long long>{0, 1, -1}, {0, 2, -1}, {0, 1, 2, -1, 0}, {0, 3, 9, 27}, {0, -1, 1, 0}}) {
      const Functional f(v);
      if (!is_generic_integer(f)) continue;
      const Representation rep = build_from_functional(f, Permutation::identity(f.size()));
      std::vector<long long> shifted = v;
      for (auto& x : shifted) x -= v[0];
      CHECK(extract_functional(rep).coords == shifted);
    }
  }

  TEST_CASE("parabolic construction") {
    // The subgroup generated by s1 and s3 in S_4 acting on its descent class.
    const Representation rep =
        build_from_functional(Functional({0, 1, 0, -1}), Permutation::identity(4), Normalization::Seminormal, std::vector<int>{1, 3});
    CHECK(rep.generators == std::vector<int>{1, 3});
    CHECK(verify_coxeter(rep));
    CHECK(verify_axiom_B(rep));
  }
}
