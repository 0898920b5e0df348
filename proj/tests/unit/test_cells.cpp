#include <doctest.h>

#include "ayrep/cells.hpp"
#include "ayrep/error.hpp"
#include "oracles.hpp"

using namespace ayrep;

namespace {

std::vector<std::vector<long long>> vectors_in_box(int n, int lo, int hi) {
  std::vector<std::vector<long long>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<long long>> next;
    for (const auto& v : out)
      for (int x = lo; x <= hi; ++x) {
        next.push_back(v);
        next.back().push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::string> strs(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

}  // namespace

TEST_SUITE("cells") {
  TEST_CASE("descent cell of (0,2,-1)") {
    const Functional f({0, 2, -1});
    CHECK(pair(f, Reflection::of(1, 3)) == -1);
    const auto A = boundary_reflections(f);
    REQUIRE(A.size() == 1);
    CHECK(A[0] == Reflection::of(1, 3));
    const Cell K = descent_cell(f, Permutation::identity(3));
    CHECK(strs(K.members) == std::vector<std::string>{"1,2,3", "2,1,3", "1,3,2"});
    CHECK(K.interior == std::vector<Reflection>{Reflection::of(1, 2), Reflection::of(2, 3)});
    CHECK(K.boundary == std::vector<Reflection>{Reflection::of(1, 3)});
    CHECK(is_generic(f, K));
    CHECK(is_convex(K.members));
  }

  TEST_CASE("descent cells match the definition") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& v : vectors_in_box(n, -2, 2)) {
        const Functional f(v);
        for (const auto& w : oracle::all_permutations(n)) {
          const Cell K = descent_cell(f, oracle::perm_of(w));
          CHECK(oracle::words_of(K.members) == oracle::descent_class(v, w));
        }
      }
  }

  TEST_CASE("W-generic functionals give the whole group") {
    const Cell K = descent_cell(Functional({1, 3, 9, 27}), Permutation::identity(4));
    CHECK(K.size() == 24u);
    CHECK(K.boundary.empty());
  }

  TEST_CASE("cells are convex") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& v : vectors_in_box(n, -2, 2)) {
        const Cell K = descent_cell(Functional(v), Permutation::identity(n));
        CHECK(oracle::geodesically_convex(oracle::words_of(K.members), n));
      }
  }

  TEST_CASE("genericity conditions") {
    const Cell K = descent_cell(Functional({0, 0, 5}), Permutation::identity(3));
    CHECK(genericity_violation(Functional({0, 0, 5}), K).has_value());
    CHECK_FALSE(is_generic_integer(Functional({0, 0, 5})));
    // A zero pairing bracketed by +1 and -1 pairings is allowed.
    CHECK(is_generic_integer(Functional({0, 1, -1, 0})));
    CHECK_THROWS_AS(is_generic(Functional({0, 2, -1}), make_cell({Permutation::parse("2,1,3")})), PreconditionError);
  }

  TEST_CASE("integer genericity criterion agrees with cell genericity") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& v : vectors_in_box(n, -2, 2)) {
        const Functional f(v);
        const Cell K = descent_cell(f, Permutation::identity(n));
        CHECK(is_generic_integer(f) == is_generic(f, K));
      }
  }

  TEST_CASE("cell and tableau bijection") {
    for (int n = 1; n <= 5; ++n)
      for (const SkewShape& shape : skew_shapes(n)) {
        const Tableau Q = row_tableau(shape);
        const Functional f(content_vector(Q));
        const auto pairs = cell_tableau_bijection(f, Q);
        CHECK(pairs.size() == enumerate_standard(shape).size());
        std::set<Tableau> images;
        for (const auto& [pi, T] : pairs) {
          CHECK(T.is_standard());
          CHECK(T == relabel(Q, pi));
          images.insert(T);
        }
        CHECK(images.size() == pairs.size());
      }
  }

  TEST_CASE("standard relabellings match brute force") {
    for (int n = 1; n <= 5; ++n)
      for (const SkewShape& shape : skew_shapes(n)) {
        const Tableau Q = enumerate_standard(shape).back();
        CHECK(oracle::words_of(standard_relabellings(Q)) == oracle::relabellings(Q));
      }
  }

  TEST_CASE("minimal AY cells match the family sigma B_Q") {
    for (int n = 1; n <= 3; ++n) {
      const auto family = oracle::minimal_cell_family(n, skew_shapes(n));
      const auto G = oracle::all_permutations(n);
      // Every subset of S_n.
      for (unsigned mask = 1; mask < (1u << G.size()); ++mask) {
        std::vector<Permutation> K;
        std::set<oracle::Word> S;
        for (std::size_t i = 0; i < G.size(); ++i)
          if (mask & (1u << i)) {
            K.push_back(oracle::perm_of(G[i]));
            S.insert(G[i]);
          }
        const auto witness = minimal_ay_cell_witness(K);
        CHECK(witness.has_value() == family.count(S) > 0);
        if (witness) {
          std::set<oracle::Word> shifted;
          for (const auto& b : oracle::relabellings(witness->tableau))
            shifted.insert(oracle::compose(oracle::word_of(witness->sigma), b));
          CHECK(shifted == S);
        }
      }
    }
  }

  TEST_CASE("basic flats and their partitions") {
    // <f, alpha_(1,3)> = -1 in S_3.
    const BasicFlat L(3, {{Reflection::of(1, 3), -1}});
    CHECK(L.contains(Functional({0, 2, -1})));
    CHECK_FALSE(L.contains(Functional({0, 2, 1})));
    const auto cells = flat_partition(L);
    std::size_t total = 0;
    std::set<Permutation> seen;
    for (const Cell& K : cells) {
      total += K.size();
      for (const auto& w : K.members) seen.insert(w);
    }
    CHECK(total == 6u);
    CHECK(seen.size() == 6u);
    CHECK(cells.front().size() == 3u);
    // Implied constraints: f2 - f1 = 1 and f3 - f2 = 1 force f3 - f1 = 2.
    const BasicFlat chain(3, {{Reflection::of(1, 2), 1}, {Reflection::of(2, 3), 1}});
    CHECK(chain.reflections().size() == 2u);
    CHECK_THROWS_AS(BasicFlat(3, {{Reflection::of(1, 2), 1}, {Reflection::of(2, 3), 1}, {Reflection::of(1, 3), 1}}),
                    DomainError);
  }
}
