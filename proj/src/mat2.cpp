#include "hecke/mat2.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

Mat2 Mat2::inverse() const {
  Rational dt = det();
  if (dt == 0) throw std::invalid_argument("singular matrix has no inverse");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

std::string to_string(const Mat2& m) {
  return to_string(m.a) + "," + to_string(m.b) + ";" + to_string(m.c) + "," +
         to_string(m.d);
}

Mat2 mat2_from_string(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ';') {
      parts.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4)
    throw std::invalid_argument("matrix literal must be \"a,b;c,d\": '" + s + "'");
  return {rational_from_string(parts[0]), rational_from_string(parts[1]),
          rational_from_string(parts[2]), rational_from_string(parts[3])};
}

std::array<Integer, 4> integral_entries(const Mat2& m) {
  if (!m.is_integral())
    throw NonIntegralError("matrix is not integral: " + to_string(m));
  return {m.a.get_num(), m.b.get_num(), m.c.get_num(), m.d.get_num()};
}

namespace {

struct IMat {
  Integer e[2][2];
};

// Row operation tracked in U (left factor), column operation in V (right).
void swap_rows(IMat& A, IMat& U) {
  std::swap(A.e[0][0], A.e[1][0]);
  std::swap(A.e[0][1], A.e[1][1]);
  std::swap(U.e[0][0], U.e[1][0]);
  std::swap(U.e[0][1], U.e[1][1]);
}
void swap_cols(IMat& A, IMat& V) {
  std::swap(A.e[0][0], A.e[0][1]);
  std::swap(A.e[1][0], A.e[1][1]);
  std::swap(V.e[0][0], V.e[0][1]);
  std::swap(V.e[1][0], V.e[1][1]);
}
void add_row(IMat& A, IMat& U, int dst, int src, const Integer& q) {
  A.e[dst][0] += q * A.e[src][0];
  A.e[dst][1] += q * A.e[src][1];
  U.e[dst][0] += q * U.e[src][0];
  U.e[dst][1] += q * U.e[src][1];
}
void add_col(IMat& A, IMat& V, int dst, int src, const Integer& q) {
  A.e[0][dst] += q * A.e[0][src];
  A.e[1][dst] += q * A.e[1][src];
  V.e[0][dst] += q * V.e[0][src];
  V.e[1][dst] += q * V.e[1][src];
}
void negate_row(IMat& A, IMat& U, int r) {
  A.e[r][0] = -A.e[r][0];
  A.e[r][1] = -A.e[r][1];
  U.e[r][0] = -U.e[r][0];
  U.e[r][1] = -U.e[r][1];
}

Mat2 to_mat2(const IMat& A) {
  return {Rational(A.e[0][0]), Rational(A.e[0][1]), Rational(A.e[1][0]),
          Rational(A.e[1][1])};
}

}  // namespace

SmithForm smith_form(const Mat2& m) {
  auto ent = integral_entries(m);
  if (m.det() <= 0)
    throw std::invalid_argument("smith_form requires positive determinant");
  IMat A{{{ent[0], ent[1]}, {ent[2], ent[3]}}};
  IMat U{{{1, 0}, {0, 1}}};
  IMat V{{{1, 0}, {0, 1}}};

  // Gcd-driven reduction: clear the off-diagonal by the Euclidean algorithm,
  // then fix the divisibility d1 | d2 by mixing the columns and repeating.
  while (true) {
    while (A.e[1][0] != 0 || A.e[0][1] != 0) {
      if (A.e[0][0] == 0) {
        if (A.e[1][0] != 0)
          swap_rows(A, U);
        else
          swap_cols(A, V);
        continue;
      }
      if (A.e[1][0] != 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A.e[1][0].get_mpz_t(), A.e[0][0].get_mpz_t());
        add_row(A, U, 1, 0, -q);
        if (A.e[1][0] != 0) swap_rows(A, U);
        continue;
      }
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), A.e[0][1].get_mpz_t(), A.e[0][0].get_mpz_t());
      add_col(A, V, 1, 0, -q);
      if (A.e[0][1] != 0) swap_cols(A, V);
    }
    if (A.e[0][0] != 0 && A.e[1][1] % A.e[0][0] == 0) break;
    add_col(A, V, 0, 1, 1);
  }
  if (A.e[0][0] < 0) negate_row(A, U, 0);
  if (A.e[1][1] < 0) negate_row(A, U, 1);
  return SmithForm{A.e[0][0], A.e[1][1], to_mat2(U), to_mat2(V)};
}

Mat2 hnf_cols(const Mat2& m) {
  auto ent = integral_entries(m);
  if (m.det() <= 0)
    throw std::invalid_argument("hnf_cols requires positive determinant");
  Integer a = ent[0], b = ent[1], c = ent[2], d = ent[3];
  // Column ops with determinant +1 only: x -> x*U with U in SL2(Z).
  // Euclid on the top row until b = 0.
  while (b != 0) {
    if (a == 0) {
      // swap-and-negate keeps det +1
      std::swap(a, b);
      std::swap(c, d);
      b = -b;
      d = -d;
      continue;
    }
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    b -= q * a;
    d -= q * c;
    if (b != 0) {
      std::swap(a, b);
      std::swap(c, d);
      b = -b;
      d = -d;
    }
  }
  if (a < 0) {  // negate both columns (right multiply by -I)
    a = -a;
    c = -c;
    d = -d;
  }
  // Now [[a,0],[c,d]] with a > 0, so d = det/a > 0; reduce c mod d.
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return {Rational(a), Rational(0), Rational(r), Rational(d)};
}

}  // namespace hecke
