#include "hecke/linalg.hpp"

#include <stdexcept>

namespace hecke {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::transpose() const {
  RatMat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool RatMat::is_integral() const {
  for (const Rational& q : data_)
    if (!is_integer(q)) return false;
  return true;
}

bool RatMat::is_zero() const {
  for (const Rational& q : data_)
    if (q != 0) return false;
  return true;
}

RatMat operator*(const RatMat& x, const RatMat& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matmul shape mismatch");
  RatMat out(x.rows_, y.cols_);
  for (std::size_t r = 0; r < x.rows_; ++r)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Rational& v = x.at(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < y.cols_; ++c) out.at(r, c) += v * y.at(k, c);
    }
  return out;
}

RatMat operator+(const RatMat& x, const RatMat& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  RatMat out(x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.data_.size(); ++i)
    out.data_[i] = x.data_[i] + y.data_[i];
  return out;
}

RatMat operator-(const RatMat& x, const RatMat& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  RatMat out(x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.data_.size(); ++i)
    out.data_[i] = x.data_[i] - y.data_[i];
  return out;
}

RatMat operator*(const Rational& s, const RatMat& x) {
  RatMat out(x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.data_.size(); ++i) out.data_[i] = s * x.data_[i];
  return out;
}

bool operator==(const RatMat& x, const RatMat& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

std::vector<std::size_t> rref_in_place(RatMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m.at(pr, col) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m.at(pr, c), m.at(row, c));
    Rational inv = 1 / m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RatMat kernel_basis(const RatMat& m) {
  RatMat r = m;
  std::vector<std::size_t> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMat out(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    out.at(fc, k) = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      out.at(pivots[pr], k) = -r.at(pr, fc);
  }
  return out;
}

RatMat solve_exact(const RatMat& A, const RatMat& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("solve shape mismatch");
  RatMat aug(A.rows(), A.cols() + B.cols());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) aug.at(r, c) = A.at(r, c);
    for (std::size_t c = 0; c < B.cols(); ++c)
      aug.at(r, A.cols() + c) = B.at(r, c);
  }
  std::vector<std::size_t> pivots = rref_in_place(aug);
  RatMat X(A.cols(), B.cols());
  std::vector<bool> solved(A.cols(), false);
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
    if (pivots[pr] >= A.cols())
      throw std::invalid_argument("inconsistent linear system");
    solved[pivots[pr]] = true;
    for (std::size_t c = 0; c < B.cols(); ++c)
      X.at(pivots[pr], c) = aug.at(pr, A.cols() + c);
  }
  for (std::size_t c = 0; c < A.cols(); ++c)
    if (!solved[c])
      throw std::invalid_argument("solve_exact requires full column rank");
  return X;
}

std::vector<Rational> char_poly(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly needs square");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A(M_k + c I).
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  RatMat M = RatMat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    M = m * M;
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += M.at(i, i);
    Rational c = -tr / Rational(static_cast<long>(k));
    coeffs[n - k] = c;
    for (std::size_t i = 0; i < n; ++i) M.at(i, i) += c;
  }
  return coeffs;
}

std::vector<std::pair<Integer, std::size_t>> integer_roots(
    const std::vector<Rational>& coeffs) {
  std::vector<Integer> poly;
  for (const Rational& c : coeffs) {
    if (!is_integer(c))
      throw std::invalid_argument("integer_roots expects integer coefficients");
    poly.push_back(c.get_num());
  }
  std::vector<std::pair<Integer, std::size_t>> roots;
  auto eval_is_zero = [](const std::vector<Integer>& p, const Integer& x) {
    Integer acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc == 0;
  };
  auto deflate = [](std::vector<Integer>& p, const Integer& r) {
    // synthetic division by (x - r); remainder is known to vanish
    std::vector<Integer> q(p.size() - 1);
    Integer carry = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = p[i] + carry * r;
    }
    p = std::move(q);
  };
  // strip x^k factors first
  std::size_t zero_mult = 0;
  while (poly.size() > 1 && poly[0] == 0) {
    ++zero_mult;
    poly.erase(poly.begin());
  }
  if (zero_mult) roots.emplace_back(Integer(0), zero_mult);
  bool progress = true;
  while (progress && poly.size() > 1) {
    progress = false;
    Integer c0 = poly[0];
    std::vector<Integer> candidates;
    Integer c0_abs = abs(c0);
    for (Integer t(1); t * t <= c0_abs; ++t) {
      if (c0 % t != 0) continue;
      Integer u = c0_abs / t;
      candidates.push_back(t);
      candidates.push_back(u);
      candidates.push_back(-t);
      candidates.push_back(-u);
    }
    for (const Integer& r : candidates) {
      std::size_t mult = 0;
      while (poly.size() > 1 && eval_is_zero(poly, r)) {
        deflate(poly, r);
        ++mult;
      }
      if (mult) {
        bool merged = false;
        for (auto& [root, m0] : roots)
          if (root == r) {
            m0 += mult;
            merged = true;
          }
        if (!merged) roots.emplace_back(r, mult);
        progress = true;
        break;
      }
    }
  }
  return roots;
}

}  // namespace hecke
