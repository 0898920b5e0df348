#include "ayrep/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "ayrep/error.hpp"

namespace ayrep {
namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw DomainError("empty entry in one-line notation '" + std::string(text) + "'");
    int value = 0;
    if (token.front() == '+') token.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw DomainError("bad integer '" + std::string(token) + "' in one-line notation");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw DomainError("not a permutation of 1.." + std::to_string(n) + ": " + join(images_));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::simple_reflection(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("s_" + std::to_string(i) + " is not a generator of S_" + std::to_string(n));
  return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw DomainError("bad transposition (" + std::to_string(i) + "," + std::to_string(j) + ") in S_" + std::to_string(n));
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
  return p;
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_int_list(text)); }

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

std::string Permutation::str() const { return join(images_); }

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DomainError("composing permutations of different degree");
  Permutation c;
  c.images_.resize(a.images_.size());
  for (int i = 1; i <= a.size(); ++i) c.images_[static_cast<std::size_t>(i - 1)] = a(b(i));
  return c;
}

int length(const Permutation& w) {
  int count = 0;
  const auto im = w.images();
  for (std::size_t i = 0; i < im.size(); ++i)
    for (std::size_t j = i + 1; j < im.size(); ++j)
      if (im[i] > im[j]) ++count;
  return count;
}

Reflection Reflection::of(int a, int b) {
  if (a == b) throw DomainError("a reflection needs two distinct letters");
  return a < b ? Reflection{a, b} : Reflection{b, a};
}

std::string Reflection::str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::vector<Reflection> all_reflections(int n) {
  std::vector<Reflection> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

Reflection conjugate_simple(const Permutation& w, int k) { return Reflection::of(w(k), w(k + 1)); }

bool is_left_descent(const Permutation& w, const Reflection& t) {
  if (t.j > w.size()) throw DomainError("reflection " + t.str() + " outside S_" + std::to_string(w.size()));
  return is_left_descent_inv(w.inverse(), t);
}

std::vector<Reflection> left_descents_in(std::span<const Reflection> A, const Permutation& w) {
  const Permutation inv = w.inverse();
  std::vector<Reflection> out;
  for (const Reflection& t : A) {
    if (t.j > w.size()) throw DomainError("reflection " + t.str() + " outside S_" + std::to_string(w.size()));
    if (is_left_descent_inv(inv, t)) out.push_back(t);
  }
  return out;
}

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
      throw DomainError("not a signed permutation of 1.." + std::to_string(n) + ": " + join(images_));
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPermutation::SignedPermutation(const Permutation& p)
    : images_(p.images().begin(), p.images().end()) {}

SignedPermutation SignedPermutation::identity(int n) { return SignedPermutation(Permutation::identity(n)); }

SignedPermutation SignedPermutation::generator(int n, int i) {
  if (i < 0 || i >= n) throw DomainError("s_" + std::to_string(i) + " is not a generator of B_" + std::to_string(n));
  SignedPermutation p = identity(n);
  if (i == 0)
    p.images_[0] = -1;
  else
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

SignedPermutation SignedPermutation::parse(std::string_view text) { return SignedPermutation(parse_int_list(text)); }

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) {
    const int v = (*this)(i);
    inv[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
  }
  SignedPermutation p;
  p.images_ = std::move(inv);
  return p;
}

bool SignedPermutation::is_unsigned() const noexcept {
  return std::all_of(images_.begin(), images_.end(), [](int v) { return v > 0; });
}

Permutation SignedPermutation::to_permutation() const {
  if (!is_unsigned()) throw DomainError("signed permutation " + str() + " is not in S_n");
  return Permutation(images_);
}

std::string SignedPermutation::str() const { return join(images_); }

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) throw DomainError("composing signed permutations of different degree");
  SignedPermutation c;
  c.images_.resize(a.images_.size());
  for (int i = 1; i <= a.size(); ++i) {
    const int v = b(i);
    c.images_[static_cast<std::size_t>(i - 1)] = v > 0 ? a(v) : -a(-v);
  }
  return c;
}

int length_b(const SignedPermutation& w) {
  int count = 0;
  const auto im = w.images();
  for (std::size_t i = 0; i < im.size(); ++i) {
    for (std::size_t j = i + 1; j < im.size(); ++j)
      if (im[i] > im[j]) ++count;
    if (im[i] < 0) count -= im[i];
  }
  return count;
}

}  // namespace ayrep
