#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ayrep {

/// An element of S_n in one-line notation: images()[i-1] = pi(i).
///
/// Composition is functional, (a * b)(i) = a(b(i)). Right multiplication by the
/// simple reflection s_i therefore swaps positions i and i+1, and left
/// multiplication by a transposition (i, j) swaps the values i and j.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// s_i = (i, i+1), 1 <= i < n.
  static Permutation simple_reflection(int n, int i);
  static Permutation transposition(int n, int i, int j);
  /// Comma-separated one-line notation, e.g. "3,2,1,5,4".
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::string str() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Inversion count of the one-line word; equals the Coxeter length.
int length(const Permutation& w);

/// A transposition (i, j) with i < j.
struct Reflection {
  int i = 1;
  int j = 2;

  static Reflection of(int a, int b);  // normalizes the order
  Permutation as_permutation(int n) const { return Permutation::transposition(n, i, j); }
  std::string str() const;

  friend bool operator==(const Reflection&, const Reflection&) = default;
  friend auto operator<=>(const Reflection&, const Reflection&) = default;
};

/// All transpositions of S_n in lexicographic order.
std::vector<Reflection> all_reflections(int n);

/// w s_k w^{-1} = (w(k), w(k+1)).
Reflection conjugate_simple(const Permutation& w, int k);

/// l(t w) < l(w) for t = (i, j), i.e. w^{-1}(i) > w^{-1}(j).
bool is_left_descent(const Permutation& w, const Reflection& t);
/// Same test with a precomputed inverse.
inline bool is_left_descent_inv(const Permutation& w_inverse, const Reflection& t) {
  return w_inverse(t.i) > w_inverse(t.j);
}

/// Des_A(w) = {t in A : l(t w) < l(w)}, in the order of A.
std::vector<Reflection> left_descents_in(std::span<const Reflection> A, const Permutation& w);

/// An element of the hyperoctahedral group B_n as a signed permutation
/// of {1..n}. Generators: s_0 negates the first entry, s_i (i >= 1) swaps
/// entries i and i+1 (both by right multiplication).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> images);
  explicit SignedPermutation(const Permutation& p);

  static SignedPermutation identity(int n);
  static SignedPermutation generator(int n, int i);
  static SignedPermutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  SignedPermutation inverse() const;
  bool is_unsigned() const noexcept;
  /// Throws DomainError when some entry is negative.
  Permutation to_permutation() const;
  std::string str() const;

  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> images_;
};

/// Length in B_n: inv(w(1..n)) minus the sum of the negative entries.
int length_b(const SignedPermutation& w);

}  // namespace ayrep
