#pragma once

#include <cstddef>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// Small dense matrix over Q with exact arithmetic throughout. Sized for
// desk-scale modular symbol spaces; no pivoting heuristics needed beyond
// first-nonzero.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatMat transpose() const;
  bool is_integral() const;
  bool is_zero() const;

  friend RatMat operator*(const RatMat& x, const RatMat& y);
  friend RatMat operator+(const RatMat& x, const RatMat& y);
  friend RatMat operator-(const RatMat& x, const RatMat& y);
  friend RatMat operator*(const Rational& s, const RatMat& x);
  friend bool operator==(const RatMat& x, const RatMat& y);
  friend bool operator!=(const RatMat& x, const RatMat& y) { return !(x == y); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref_in_place(RatMat& m);

// Columns spanning the kernel of m (each returned column v has m*v = 0).
RatMat kernel_basis(const RatMat& m);

// Solves A * X = B exactly where A has full column rank; throws if the
// system is inconsistent.
RatMat solve_exact(const RatMat& A, const RatMat& B);

// Coefficients c_0 .. c_n of the characteristic polynomial
// det(x*I - m) = c_n x^n + ... + c_0 (c_n = 1), by the Faddeev-LeVerrier
// recursion over Q.
std::vector<Rational> char_poly(const RatMat& m);

// Integer roots with multiplicity of a monic integer polynomial given by
// rational coefficients c_0..c_n (low to high).
std::vector<std::pair<Integer, std::size_t>> integer_roots(
    const std::vector<Rational>& coeffs);

}  // namespace hecke
