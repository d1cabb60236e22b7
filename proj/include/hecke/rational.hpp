#pragma once

#include <gmpxx.h>

#include <string>

namespace hecke {

// Exact scalar substrate. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// as long as values are canonicalized on construction; all arithmetic
// preserves that form. No floating point anywhere in the engine.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "n" or "p/q". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Gaussian rational a + b*i with componentwise exact arithmetic.
// Involution is conjugation.
struct GaussRat {
  Rational re{0};
  Rational im{0};

  GaussRat() = default;
  GaussRat(Rational r) : re(std::move(r)) {}
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat conj() const { return {re, -im}; }
  // re^2 + im^2, the value of z * conj(z).
  Rational norm2() const { return re * re + im * im; }

  friend GaussRat operator+(const GaussRat& x, const GaussRat& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussRat operator-(const GaussRat& x, const GaussRat& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussRat operator-(const GaussRat& x) { return {-x.re, -x.im}; }
  friend GaussRat operator*(const GaussRat& x, const GaussRat& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussRat& x, const GaussRat& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const GaussRat& x, const GaussRat& y) {
    return !(x == y);
  }
};

std::string to_string(const GaussRat& z);

}  // namespace hecke
