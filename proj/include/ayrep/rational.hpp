#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ayrep {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

/// p/q in lowest terms; q must be nonzero.
inline Rational ratio(long long p, long long q = 1) {
  Rational r(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
  r.canonicalize();
  return r;
}

/// Always "p/q", with q = 1 written out, so the JSON form parses uniformly.
std::string to_fraction_string(const Rational& x);
Rational parse_rational(std::string_view text);

}  // namespace ayrep
