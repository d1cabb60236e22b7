#include "hecke/rational.hpp"

#include <stdexcept>

namespace hecke {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const GaussRat& z) {
  if (z.im == 0) return to_string(z.re);
  std::string s = to_string(z.re);
  s += (z.im < 0) ? "-" : "+";
  Rational a = abs(z.im);
  if (a != 1) s += to_string(a) + "*";
  s += "i";
  return s;
}

}  // namespace hecke
