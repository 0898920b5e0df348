#include <doctest.h>

#include <random>

#include "ayrep/error.hpp"
#include "ayrep/groups.hpp"
#include "oracles.hpp"

using namespace ayrep;

TEST_SUITE("groups") {
  TEST_CASE("composition applies the right factor first") {
    const Permutation a = Permutation::parse("2,3,1");
    const Permutation b = Permutation::parse("2,1,3");
    const Permutation ab = a * b;
    for (int i = 1; i <= 3; ++i) CHECK(ab(i) == a(b(i)));
    // Right multiplication by s_1 swaps positions 1 and 2.
    CHECK((a * Permutation::simple_reflection(3, 1)).str() == "3,2,1");
    CHECK((a * a.inverse()).is_identity());
  }

  TEST_CASE("parse rejects non-permutations") {
    CHECK_THROWS_AS(Permutation::parse("1,1,2"), DomainError);
    CHECK_THROWS_AS(Permutation::parse("1,x"), DomainError);
    CHECK_THROWS_AS(Permutation::parse("0,1"), DomainError);
  }

  TEST_CASE("length is the Cayley graph distance") {
    for (int n = 1; n <= 5; ++n)
      for (const auto& [w, d] : oracle::bfs_lengths(n)) CHECK(length(oracle::perm_of(w)) == d);
  }

  TEST_CASE("type B length is the Cayley graph distance") {
    for (int n = 1; n <= 4; ++n) {
      const auto dist = oracle::bfs_lengths_b(n);
      CHECK(dist.size() == static_cast<std::size_t>(enumerate_group(CoxeterType::B, n).size()));
      for (const auto& [w, d] : dist) CHECK(length_b(SignedPermutation(w)) == d);
    }
  }

  TEST_CASE("enumeration records reduced words") {
    for (CoxeterType type : {CoxeterType::A, CoxeterType::B}) {
      const GroupListing G = enumerate_group(type, 4);
      CHECK(G.size() == (type == CoxeterType::A ? 24u : 384u));
      CHECK(G.elements.front() == SignedPermutation::identity(4));
      for (std::size_t k = 0; k < G.size(); ++k) {
        SignedPermutation w = SignedPermutation::identity(4);
        for (int s : G.words[k]) w = w * SignedPermutation::generator(4, s);
        CHECK(w == G.elements[k]);
        CHECK(static_cast<int>(G.words[k].size()) == length_b(w));
        CHECK(G.index_of(w) == k);
      }
    }
  }

  TEST_CASE("size caps are enforced") {
    GroupCaps caps;
    caps.max_n_a = 3;
    CHECK_THROWS_AS(enumerate_group(CoxeterType::A, 4, caps), SizeLimitError);
    CHECK_NOTHROW(enumerate_group(CoxeterType::A, 3, caps));
  }

  TEST_CASE("weak intervals match the length criterion") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : oracle::all_permutations(n))
        CHECK(oracle::words_of(weak_interval(oracle::perm_of(w))) == oracle::weak_interval(w));
  }

  TEST_CASE("convexity agrees with the geodesic definition") {
    // The example cell {id, s1, s2} and every interval are convex; random
    // subsets of S_4 exercise both answers.
    std::vector<Permutation> K{Permutation::parse("1,2,3"), Permutation::parse("2,1,3"), Permutation::parse("1,3,2")};
    CHECK(is_convex(K));
    const auto G4 = oracle::all_permutations(4);
    std::mt19937_64 rng(7);
    int convex_seen = 0, nonconvex_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
      std::set<oracle::Word> S;
      // Grow a random connected-ish subset so convex examples also occur.
      S.insert(G4[rng() % G4.size()]);
      const int target = 1 + static_cast<int>(rng() % 6);
      while (static_cast<int>(S.size()) < target) {
        auto it = S.begin();
        std::advance(it, static_cast<long>(rng() % S.size()));
        oracle::Word v = *it;
        const std::size_t i = rng() % 3;
        std::swap(v[i], v[i + 1]);
        S.insert(v);
      }
      std::vector<Permutation> members;
      for (const auto& w : S) members.push_back(oracle::perm_of(w));
      const bool expected = oracle::geodesically_convex(S, 4);
      CHECK(is_convex(members) == expected);
      (expected ? convex_seen : nonconvex_seen)++;
    }
    CHECK(convex_seen > 0);
    CHECK(nonconvex_seen > 0);
    for (const auto& w : G4) {
      std::vector<Permutation> I;
      for (const auto& u : oracle::weak_interval(w)) I.push_back(oracle::perm_of(u));
      CHECK(is_convex(I));
    }
  }

  TEST_CASE("minimal coset representatives have no left descent in J") {
    for (int n = 2; n <= 5; ++n)
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> J;
        for (int j = 1; j < n; ++j)
          if (mask & (1u << (j - 1))) J.push_back(j);
        std::set<oracle::Word> expected;
        for (const auto& w : oracle::all_permutations(n)) {
          const auto inv = oracle::inverse(w);
          bool ok = true;
          for (int j : J) ok = ok && oracle::at(inv, j) < oracle::at(inv, j + 1);
          if (ok) expected.insert(w);
        }
        CHECK(oracle::words_of(minimal_coset_reps(n, J)) == expected);
      }
  }

  TEST_CASE("coxeter matrix") {
    CHECK(coxeter_m(CoxeterType::A, 1, 2) == 3);
    CHECK(coxeter_m(CoxeterType::A, 1, 3) == 2);
    CHECK(coxeter_m(CoxeterType::B, 0, 1) == 4);
    CHECK(coxeter_m(CoxeterType::B, 0, 2) == 2);
    CHECK(coxeter_m(CoxeterType::B, 2, 2) == 1);
    CHECK(coxeter_generators(CoxeterType::B, 3) == std::vector<int>{0, 1, 2});
  }
}
