#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ayrep/permutation.hpp"

namespace ayrep {

/// An integer representative of a functional on the type-A root space,
/// i.e. a class of Z^n modulo the all-ones vector.
///
/// The pairing is pinned as <f, alpha_(i,j)> = f_j - f_i for i < j, so that
/// the diagonal coefficient of s_k at C_w is 1 / (f_{w(k+1)} - f_{w(k)}).
struct Functional {
  std::vector<long long> coords;

  Functional() = default;
  explicit Functional(std::vector<long long> c) : coords(std::move(c)) {}
  static Functional parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(coords.size()); }
  long long operator()(int i) const { return coords[static_cast<std::size_t>(i - 1)]; }

  /// <f, w(alpha_{s_k})> = f_{w(k+1)} - f_{w(k)}; positive root up to sign.
  long long on_simple_image(const Permutation& w, int k) const { return (*this)(w(k + 1)) - (*this)(w(k)); }

  std::string str() const;

  friend bool operator==(const Functional&, const Functional&) = default;
};

/// <f, alpha_t> for t = (i, j), i < j: f_j - f_i.
long long pair(const Functional& f, const Reflection& t);

}  // namespace ayrep
