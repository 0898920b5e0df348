#include <doctest.h>

#include "ayrep/tops.hpp"
#include "oracles.hpp"

using namespace ayrep;

TEST_SUITE("tops") {
  TEST_CASE("n = 3 has two certified top elements") {
    const TopReport report = top_elements(3);
    REQUIRE(report.oracle.size() == 2u);
    CHECK(report.oracle[0].element.str() == "1,2,3");
    CHECK(report.oracle[1].element.str() == "1,3,2");
    CHECK(report.partition_count == 3);
    CHECK(report.down_matches_oracle);
    CHECK_FALSE(report.up_matches_oracle);
    CHECK_FALSE(report.discrepancies.empty());
  }

  TEST_CASE("oracle set agrees with a brute-force search") {
    for (int n = 1; n <= 4; ++n) {
      const TopReport report = top_elements(n);
      std::set<oracle::Word> found;
      for (const auto& e : report.oracle) {
        found.insert(oracle::word_of(e.element));
        CHECK(e.witness.irreducible);
        CHECK(e.interval_size == oracle::weak_interval(oracle::word_of(e.element)).size());
      }
      CHECK(found == oracle::top_elements(n));
      std::set<oracle::Word> candidates;
      for (const auto& p : report.candidates_down) candidates.insert(oracle::word_of(p));
      CHECK(candidates == found);
    }
  }

  TEST_CASE("column words of row tableaux") {
    const TopReport report = top_elements(4);
    for (const auto& row : report.rows) {
      const Tableau R = row_tableau(SkewShape(row.shape));
      CHECK(row.row_tableau == R);
      CHECK(row.sigma_down == reading_words(R).column_word_down);
      CHECK(row.sigma_up == reading_words(R).column_word_up);
      CHECK(row.b_size == static_cast<std::size_t>(hook_length_count(row.shape)));
    }
  }

  TEST_CASE("weak maximal elements of an interval") {
    const auto I = weak_interval(Permutation::parse("2,3,1"));
    const auto top = weak_maximal(I);
    REQUIRE(top.size() == 1u);
    CHECK(top[0].str() == "2,3,1");
  }
}
