#pragma once

#include <array>
#include <string>

#include "hecke/rational.hpp"

namespace hecke {

// Immutable 2x2 rational matrix, row-major entries a b / c d.
// Elements of GL2(Q)+ are expected to satisfy det > 0; operations that
// require it check and throw.
struct Mat2 {
  Rational a{0}, b{0}, c{0}, d{0};

  Mat2() = default;
  Mat2(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 diag(Rational x, Rational y) { return {std::move(x), 0, 0, std::move(y)}; }

  Rational det() const { return a * d - b * c; }
  Rational trace() const { return a + d; }

  bool is_integral() const {
    return is_integer(a) && is_integer(b) && is_integer(c) && is_integer(d);
  }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

  // det(x) * x^{-1}; integral whenever x is, and an anti-automorphism.
  Mat2 adjugate() const { return {d, -b, -c, a}; }

  Mat2 inverse() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
  // Lexicographic entry order; used for canonical orderings and map keys.
  friend bool operator<(const Mat2& x, const Mat2& y) {
    if (int s = cmp(x.a, y.a)) return s < 0;
    if (int s = cmp(x.b, y.b)) return s < 0;
    if (int s = cmp(x.c, y.c)) return s < 0;
    return cmp(x.d, y.d) < 0;
  }
};

// "a,b;c,d" with entries "n" or "p/q".
std::string to_string(const Mat2& m);
Mat2 mat2_from_string(const std::string& s);

// Integer parts as Integer values; throws NonIntegralError.
std::array<Integer, 4> integral_entries(const Mat2& m);

// Smith normal form data of an integral matrix A of positive determinant:
// U*A*V = diag(d1, d2) with d1 | d2, d1, d2 > 0 and det U, det V in {+1,-1}.
struct SmithForm {
  Integer d1, d2;
  Mat2 U, V;
};

SmithForm smith_form(const Mat2& m);

// Canonical representative of the coset x*SL2(Z) for integral x, det x > 0:
// the unique column-equivalent [[p,0],[r,q]] with p,q > 0 and 0 <= r < q.
Mat2 hnf_cols(const Mat2& m);

}  // namespace hecke
