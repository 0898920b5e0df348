#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ayrep/permutation.hpp"

namespace ayrep {

using Partition = std::vector<int>;

/// A box (row, column), both 1-based. Its content is column - row.
struct Box {
  int row = 1;
  int col = 1;

  int content() const noexcept { return col - row; }
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// A skew diagram lambda/mu. mu is padded with zeros to the length of lambda.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition lambda, Partition mu = {});
  /// "3,2" or "3,3,1/3,1".
  static SkewShape parse(std::string_view text);

  const Partition& lambda() const noexcept { return lambda_; }
  const Partition& mu() const noexcept { return mu_; }
  int rows() const noexcept { return static_cast<int>(lambda_.size()); }
  int size() const noexcept { return size_; }
  bool is_straight() const noexcept;
  bool contains(Box b) const noexcept;
  /// Boxes of lambda/mu in row-major order.
  std::vector<Box> boxes() const;
  /// mu is printed only when nonzero.
  std::string str() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition lambda_;
  Partition mu_;
  int size_ = 0;
};

/// A filling of the boxes of a skew shape by distinct positive integers.
/// rows()[r] lists the entries of row r+1 from column mu_{r+1}+1 onwards.
class Tableau {
 public:
  Tableau() = default;
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);
  /// Straight shape read off the row lengths.
  static Tableau from_rows(std::vector<std::vector<int>> rows);
  /// One line per row, entries separated by spaces, '.' for boxes of mu.
  static Tableau parse(std::string_view text);

  const SkewShape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int size() const noexcept { return shape_.size(); }

  int at(Box b) const;
  std::optional<Box> find(int value) const;
  /// Entries in row-major order.
  std::vector<int> row_major() const;
  int max_entry() const;

  /// Rows increase left to right and columns top to bottom.
  bool is_increasing() const;
  /// Increasing, with entries exactly 1..size.
  bool is_standard() const;

  /// Text form, e.g. ". . 1\n2 3\n".
  std::string str() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

using ContentVector = std::vector<long long>;

/// Partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions(int n);
/// Hook-length count of standard tableaux of a straight shape.
long long hook_length_count(const Partition& lambda);
/// Skew diagrams with n boxes up to translation of components: no empty
/// rows, a box in column 1, and consecutive rows overlapping or touching
/// diagonally (mu_r <= lambda_{r+1}).
std::vector<SkewShape> skew_shapes(int n);

/// All standard fillings, sorted lexicographically by row-major reading word.
std::vector<Tableau> enumerate_standard(const SkewShape& shape);
/// The standard tableau filled row by row (top to bottom, left to right).
Tableau row_tableau(const SkewShape& shape);
/// The standard tableau filled column by column (left to right, top to bottom).
Tableau column_tableau(const SkewShape& shape);

ContentVector content_vector(const Tableau& Q);
/// Consecutive differences (v_2 - v_1, ..., v_n - v_{n-1}).
std::vector<long long> derived(const std::vector<long long>& v);

/// First pair (i, j), 1-based, with c_i == c_j lacking c_i + 1 and c_i - 1 in between.
std::optional<std::pair<int, int>> content_vector_violation(const ContentVector& c);
bool is_content_vector(const ContentVector& c);

/// A standard skew tableau realizing c exactly (not just up to shift).
/// Built by appending letters one at a time: a repeated content goes
/// diagonally below its previous occurrence; a new content splits the
/// tableau into the parts above and below it, which are slid along
/// diagonals to make room. The result is shifted diagonally to the minimal
/// position with all rows and columns >= 1.
Tableau tableau_from_content(const ContentVector& c);

/// Q^{pi^{-1}}: every entry i replaced by pi^{-1}(i). pi must have degree max_entry(Q).
Tableau relabel(const Tableau& Q, const Permutation& pi);

struct ReadingWords {
  Permutation row_word;          // rows right to left, top to bottom
  Permutation column_word_down;  // columns top to bottom, left to right
  Permutation column_word_up;    // columns bottom to top, left to right
};
ReadingWords reading_words(const Tableau& Q);

bool is_row_tableau(const Tableau& Q);
bool is_column_tableau(const Tableau& Q);

enum class HookCase { SameRow, SameColumn, Neither };

struct HookDistance {
  long long value = 0;
  HookCase tag = HookCase::Neither;
};
/// h(k) = c(k+1) - c(k) with the row/column/neither trichotomy.
HookDistance hook_distance(const Tableau& Q, int k);

/// Pairs i < j with i strictly south of j.
int inversions(const Tableau& Q);

}  // namespace ayrep
