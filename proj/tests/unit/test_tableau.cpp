#include <doctest.h>

#include "ayrep/error.hpp"
#include "ayrep/tableau.hpp"
#include "oracles.hpp"

using namespace ayrep;

TEST_SUITE("tableau") {
  TEST_CASE("text round trip with skew boxes") {
    const Tableau T = Tableau::parse(". . .\n. 1 3\n2\n");
    CHECK(T.shape().lambda() == Partition{3, 3, 1});
    CHECK(T.shape().mu() == Partition{3, 1, 0});
    CHECK(T.str() == ". . .\n. 1 3\n2\n");
    CHECK(Tableau::parse(T.str()) == T);
    CHECK(T.is_standard());
    CHECK(SkewShape::parse("3,3,1/3,1") == T.shape());
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(SkewShape::parse("2,3"), DomainError);
    CHECK_THROWS_AS(SkewShape::parse("2,1/3"), DomainError);
    CHECK_THROWS_AS(enumerate_standard(SkewShape(Partition{2}, Partition{2})), EmptyShapeError);
    CHECK(Tableau::from_rows({{1, 3}, {2}}).is_standard());
    CHECK_FALSE(Tableau::from_rows({{1, 4}, {2}}).is_standard());
    CHECK_FALSE(Tableau::from_rows({{2, 1}}).is_increasing());
  }

  TEST_CASE("standard tableaux of every skew shape up to 6 boxes") {
    for (int n = 1; n <= 6; ++n)
      for (const SkewShape& shape : skew_shapes(n)) {
        const auto all = enumerate_standard(shape);
        const auto brute = oracle::standard_fillings(shape.lambda(), shape.mu());
        REQUIRE(all.size() == brute.size());
        std::set<std::map<std::pair<int, int>, int>> a, b(brute.begin(), brute.end());
        for (const auto& T : all) a.insert(oracle::filling_of(T));
        CHECK(a == b);
        if (shape.is_straight()) CHECK(hook_length_count(shape.lambda()) == static_cast<long long>(all.size()));
      }
  }

  TEST_CASE("partitions and the square sum of hook counts") {
    long long factorial = 1;
    for (int n = 1; n <= 7; ++n) {
      factorial *= n;
      const auto ps = partitions(n);
      CHECK(ps.size() == oracle::partitions(n).size());
      CHECK(ps.front() == Partition{n});
      long long sum = 0;
      for (const auto& p : ps) sum += hook_length_count(p) * hook_length_count(p);
      CHECK(sum == factorial);
    }
    CHECK(partitions(0) == std::vector<Partition>{{}});
  }

  TEST_CASE("skew shape listing") {
    for (int n = 1; n <= 6; ++n) {
      const auto shapes = skew_shapes(n);
      CHECK(std::is_sorted(shapes.begin(), shapes.end()));
      CHECK(std::adjacent_find(shapes.begin(), shapes.end()) == shapes.end());
      for (const auto& s : shapes) {
        CHECK(s.size() == n);
        for (int r = 1; r < s.rows(); ++r)
          CHECK(s.mu()[static_cast<std::size_t>(r - 1)] <= s.lambda()[static_cast<std::size_t>(r)]);
      }
      // Every straight shape is listed.
      for (const auto& p : partitions(n)) CHECK(std::binary_search(shapes.begin(), shapes.end(), SkewShape(p)));
    }
  }

  TEST_CASE("content vectors") {
    const Tableau T = Tableau::parse(". . .\n. 1 3\n2\n");
    CHECK(content_vector(T) == ContentVector{0, -2, 1});
    CHECK(derived({0, -2, 1}) == std::vector<long long>{-2, 3});
    CHECK(is_content_vector({0, 1, -1, 0}));
    CHECK_FALSE(is_content_vector({0, 0}));
    CHECK(content_vector_violation({0, 2, 0}) == std::pair<int, int>{1, 3});
    CHECK_FALSE(content_vector_violation({0, 1, -1, 0}).has_value());
  }

  TEST_CASE("tableau from content") {
    CHECK(tableau_from_content({0, -2, 1}).str() == ". . .\n. 1 3\n2\n");
    CHECK_THROWS_AS(tableau_from_content({0, 0}), ConstructionError);
    for (int n = 1; n <= 5; ++n)
      for (const SkewShape& shape : skew_shapes(n))
        for (const Tableau& Q : enumerate_standard(shape)) {
          const ContentVector c = content_vector(Q);
          const Tableau T = tableau_from_content(c);
          CHECK(T.is_standard());
          CHECK(content_vector(T) == c);
        }
  }

  TEST_CASE("relabelling") {
    const Tableau Q = Tableau::from_rows({{1, 2}, {3}});
    // Entry e becomes pi^{-1}(e).
    const Permutation pi = Permutation::parse("2,3,1");
    const Tableau R = relabel(Q, pi);
    CHECK(R.rows() == std::vector<std::vector<int>>{{3, 1}, {2}});
    CHECK(relabel(R, pi.inverse()) == Q);
  }

  TEST_CASE("reading words of the row tableau 123/45") {
    const Tableau Q = Tableau::from_rows({{1, 2, 3}, {4, 5}});
    const ReadingWords w = reading_words(Q);
    CHECK(w.row_word.str() == "3,2,1,5,4");
    CHECK(w.column_word_up.str() == "4,1,5,2,3");
    CHECK(w.column_word_down.str() == "1,4,2,5,3");
    CHECK(is_row_tableau(Q));
    CHECK_FALSE(is_column_tableau(Q));
    CHECK(is_column_tableau(column_tableau(SkewShape(Partition{3, 2}))));
    CHECK(row_tableau(SkewShape(Partition{3, 2})) == Q);
  }

  TEST_CASE("hook distances and inversions") {
    const Tableau Q = Tableau::from_rows({{1, 2, 4}, {3}});
    CHECK(hook_distance(Q, 1).value == 1);
    CHECK(hook_distance(Q, 1).tag == HookCase::SameRow);
    CHECK(hook_distance(Q, 2).value == -2);
    CHECK(hook_distance(Q, 2).tag == HookCase::Neither);
    CHECK(hook_distance(Tableau::from_rows({{1}, {2}}), 1).tag == HookCase::SameColumn);
    // 3 lies strictly south of 4.
    CHECK(inversions(Q) == 1);
    CHECK(inversions(row_tableau(SkewShape(Partition{3, 2}))) == 0);
  }
}
