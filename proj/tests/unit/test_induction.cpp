#include <doctest.h>

#include <functional>

#include "ayrep/error.hpp"
#include "ayrep/hyperoctahedral.hpp"
#include "ayrep/induction.hpp"
#include "oracles.hpp"

using namespace ayrep;

TEST_SUITE("induction") {
  TEST_CASE("trivial representation of <s1> in S_3") {
    const Representation psi = block_specht(3, {1}, {{2}, {1}});
    CHECK(psi.dimension() == 1);
    const Representation rho = induce(psi);
    CHECK(rho.dimension() == 3);
    const auto C = conjugacy_classes(CoxeterType::A, 3);
    const Character chi = character(rho, C);
    CHECK(chi.values == std::vector<Rational>{3, 1, 0});
    CHECK(oracle::coxeter_relations_hold(rho));
  }

  TEST_CASE("parabolic blocks") {
    CHECK(parabolic_blocks(5, {1, 3, 4}) == std::vector<std::vector<int>>{{1, 2}, {3, 4, 5}});
    CHECK(parabolic_blocks(3, {}) == std::vector<std::vector<int>>{{1}, {2}, {3}});
  }

  TEST_CASE("induced characters match the classical formula") {
    for (int n = 2; n <= 4; ++n) {
      const auto C = conjugacy_classes(CoxeterType::A, n);
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> J;
        for (int j = 1; j < n; ++j)
          if (mask & (1u << (j - 1))) J.push_back(j);
        const auto blocks = parabolic_blocks(n, J);
        std::vector<Partition> shapes(blocks.size());
        std::function<void(std::size_t)> choose = [&](std::size_t b) {
          if (b == blocks.size()) {
            const Representation psi = block_specht(n, J, shapes);
            const Representation rho = induce(psi);
            CHECK(oracle::coxeter_relations_hold(rho));
            CHECK(verify_axiom_B(rho));
            const auto expected = oracle::induced_character(n, oracle::all_traces(psi));
            CHECK(oracle::all_traces(rho) == expected);
            // The library's own classical formula agrees too.
            CHECK(character(rho, C) == classical_induced_character(n, J, block_product_values(n, J, shapes), C));
            return;
          }
          for (const auto& p : partitions(static_cast<int>(blocks[b].size()))) {
            shapes[b] = p;
            choose(b + 1);
          }
        };
        choose(0);
      }
    }
  }

  TEST_CASE("shuffle cells") {
    const Tableau P = Tableau::from_rows({{1, 2}});
    const Tableau Q(SkewShape(Partition{1}), {{3}});
    const auto cell = shuffle_cell(P, Q);
    CHECK(cell.size() == 3u);
    CHECK(std::is_sorted(cell.begin(), cell.end()));
    // Sizes (#SYT lambda)(#SYT mu) C(n, k).
    for (int n = 1; n <= 5; ++n)
      for (int k = 0; k <= n; ++k)
        for (const auto& lambda : partitions(k))
          for (const auto& mu : partitions(n - k)) {
            const BipartiteTableau PQ = row_pair(lambda, mu);
            long long binom = 1;
            for (int i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
            CHECK(static_cast<long long>(shuffle_cell(PQ.P, PQ.Q).size()) ==
                  hook_length_count(lambda) * hook_length_count(mu) * binom);
          }
    CHECK_THROWS_AS(shuffle_cell(Tableau::from_rows({{1, 3}}), Q), DomainError);
  }
}
