#include <doctest.h>

#include "ayrep/character.hpp"
#include "ayrep/representation.hpp"
#include "oracles.hpp"

using namespace ayrep;

TEST_SUITE("character") {
  TEST_CASE("classes of S_3") {
    const auto C = conjugacy_classes(CoxeterType::A, 3);
    CHECK(C.labels == std::vector<std::string>{"1,1,1", "2,1", "3"});
    CHECK(C.sizes == std::vector<long long>{1, 3, 2});
    CHECK(C.group_order == 6);
    CHECK(C.class_of(SignedPermutation(Permutation::parse("3,1,2"))) == 2u);
  }

  TEST_CASE("classes of B_n") {
    for (int n = 1; n <= 4; ++n) {
      const auto C = conjugacy_classes(CoxeterType::B, n);
      long long total = 0;
      for (auto s : C.sizes) total += s;
      CHECK(total == C.group_order);
      // Classes of B_n are indexed by pairs of partitions.
      std::size_t pairs = 0;
      for (int k = 0; k <= n; ++k) pairs += oracle::partitions(k).size() * oracle::partitions(n - k).size();
      CHECK(C.size() == pairs);
    }
  }

  TEST_CASE("characters of the example cells") {
    const auto C = conjugacy_classes(CoxeterType::A, 3);
    const auto values = [&](const Representation& rep) {
      std::vector<long> out;
      for (const auto& v : character(rep, C).values) out.push_back(v.get_num().get_si());
      return out;
    };
    // Sign plus the two-dimensional irreducible.
    CHECK(values(build_from_functional(Functional({0, 2, -1}), Permutation::identity(3))) == std::vector<long>{3, -1, 0});
    // Regular representation.
    const Representation regular = build_from_functional(Functional({0, 2, 5}), Permutation::identity(3));
    CHECK(values(regular) == std::vector<long>{6, 0, 0});
    const Character chi = character(regular, C);
    CHECK(char_inner(chi, chi, C) == Rational(6));
    CHECK_FALSE(is_irreducible(regular));
  }

  TEST_CASE("Murnaghan-Nakayama against the tables of S_3 and S_4") {
    for (int n : {3, 4})
      for (const auto& [shape, row] : oracle::character_table(n))
        for (const auto& [type, value] : row) CHECK(mn_character(SkewShape(shape), type) == value);
    CHECK(mn_character(SkewShape(Partition{2, 1}), Partition{3}) == -1);
    CHECK(mn_character(SkewShape(Partition{2, 1}), Partition{1, 1, 1}) == 2);
  }

  TEST_CASE("skew characters are traces of the Young form") {
    for (int n = 1; n <= 5; ++n) {
      const auto C = conjugacy_classes(CoxeterType::A, n);
      for (const SkewShape& shape : skew_shapes(n)) {
        const Representation rep = build_seminormal_skew(shape);
        bool constant = false;
        const auto brute = oracle::class_function(oracle::all_traces(rep), &constant);
        CHECK(constant);
        const Character chi = character(rep, C);
        for (std::size_t k = 0; k < C.size(); ++k) {
          CHECK(chi.values[k] == brute.at(C.cycle_types[k]));
          CHECK(chi.values[k] == ratio(mn_character(shape, C.cycle_types[k])));
        }
      }
    }
  }

  TEST_CASE("any realization of a content vector has the same skew character") {
    for (int n = 1; n <= 5; ++n) {
      const auto C = conjugacy_classes(CoxeterType::A, n);
      for (const SkewShape& shape : skew_shapes(n))
        for (const Tableau& Q : enumerate_standard(shape)) {
          const SkewShape other = tableau_from_content(content_vector(Q)).shape();
          CHECK(mn_class_function(other, C) == mn_class_function(shape, C));
        }
    }
  }

  TEST_CASE("element traces follow the enumeration order") {
    const Representation rep = build_seminormal_skew(SkewShape(Partition{2, 1}));
    const auto traces = element_traces(rep);
    const auto G = enumerate_group(CoxeterType::A, 3);
    const auto brute = oracle::all_traces(rep);
    REQUIRE(traces.size() == G.size());
    for (std::size_t k = 0; k < G.size(); ++k)
      CHECK(traces[k] == brute.at(oracle::word_of(G.elements[k].to_permutation())));
  }

  TEST_CASE("irreducibility of straight shapes") {
    for (int n = 1; n <= 5; ++n)
      for (const auto& p : partitions(n)) CHECK(is_irreducible(build_seminormal_skew(SkewShape(p))));
    CHECK_FALSE(is_irreducible(build_seminormal_skew(SkewShape(Partition{2, 1}, Partition{1}))));
  }
}
