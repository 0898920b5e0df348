#include "ayrep/rational.hpp"

#include "ayrep/error.hpp"

namespace ayrep {

std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw DomainError("not a rational number: '" + s + "'");
  if (sgn(r.get_den()) == 0) throw DomainError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace ayrep
