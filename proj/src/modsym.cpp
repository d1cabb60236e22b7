#include "hecke/modsym.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

CuspPoint CuspPoint::of(Integer n, Integer d) {
  if (n == 0 && d == 0) throw std::invalid_argument("(0:0) is not in P^1(Q)");
  Integer g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  n /= g;
  d /= g;
  if (d < 0 || (d == 0 && n < 0)) {
    n = -n;
    d = -d;
  }
  return {n, d};
}

std::string to_string(const CuspPoint& x) {
  if (x.is_infinity()) return "oo";
  if (x.den == 1) return x.num.get_str();
  return x.num.get_str() + "/" + x.den.get_str();
}

CuspPoint apply_moebius(const Mat2& m, const CuspPoint& x) {
  auto e = integral_entries(m);
  return CuspPoint::of(e[0] * x.num + e[1] * x.den, e[2] * x.num + e[3] * x.den);
}

namespace {

// Completes a normalized cusp a/c to [[a, b], [c, d]] in SL2(Z) and
// returns d (any solution of a*d - b*c = 1).
Integer cusp_completion_d(const CuspPoint& x) {
  Integer g, d, t;
  mpz_gcdext(g.get_mpz_t(), d.get_mpz_t(), t.get_mpz_t(), x.num.get_mpz_t(),
             x.den.get_mpz_t());
  // a*d + c*t = 1, so with b := -t we get a*d - b*c = 1.
  if (g != 1) throw std::logic_error("cusp is not in lowest terms");
  return d;
}

}  // namespace

bool cusps_equivalent(std::int64_t N, const CuspPoint& x, const CuspPoint& y) {
  // a1/c1 ~ a2/c2 iff c1*c2*m = c2*d1 - c1*d2 (mod N) is solvable, i.e.
  // gcd(c1*c2, N) | c2*d1 - c1*d2, where di completes ai/ci to SL2(Z).
  Integer n(static_cast<long>(N));
  Integer d1 = cusp_completion_d(x), d2 = cusp_completion_d(y);
  Integer g;
  Integer c1c2 = x.den * y.den;
  mpz_gcd(g.get_mpz_t(), c1c2.get_mpz_t(), n.get_mpz_t());
  Integer rhs = y.den * d1 - x.den * d2;
  return rhs % g == 0;
}

ManinBasis::ManinBasis(std::int64_t N) : N_(N) {
  p1_ = std::make_shared<P1Table>(N);
  const std::size_t mu = p1_->size();
  // sigma and tau of the two- and three-term relations.
  const Mat2 sigma = gen_s();
  const Mat2 tau{0, -1, 1, -1};
  RatMat rel(2 * mu, mu);
  for (std::size_t s = 0; s < mu; ++s) {
    std::size_t s_sigma = p1_->apply(s, sigma);
    rel.at(s, s) += 1;
    rel.at(s, s_sigma) += 1;
    std::size_t s_tau = p1_->apply(s, tau);
    std::size_t s_tau2 = p1_->apply(s_tau, tau);
    rel.at(mu + s, s) += 1;
    rel.at(mu + s, s_tau) += 1;
    rel.at(mu + s, s_tau2) += 1;
  }
  relations_ = rel;
  std::vector<std::size_t> pivots = rref_in_place(rel);
  std::vector<bool> is_pivot(mu, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < mu; ++c)
    if (!is_pivot[c]) basis_symbols_.push_back(c);

  reduction_ = RatMat(basis_symbols_.size(), mu);
  std::map<std::size_t, std::size_t> basis_pos;
  for (std::size_t k = 0; k < basis_symbols_.size(); ++k)
    basis_pos[basis_symbols_[k]] = k;
  for (std::size_t c = 0; c < mu; ++c) {
    if (auto it = basis_pos.find(c); it != basis_pos.end()) {
      reduction_.at(it->second, c) = 1;
    }
  }
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t k = 0; k < basis_symbols_.size(); ++k) {
      const Rational& coeff = rel.at(r, basis_symbols_[k]);
      if (coeff != 0) reduction_.at(k, pivots[r]) = -coeff;
    }

  // Lifts of the canonical (c : d) to SL2(Z).
  lifts_.reserve(mu);
  for (const ProjectivePoint& p : p1_->points()) {
    if (N == 1) {
      lifts_.push_back(Mat2::identity());
      continue;
    }
    Integer c0, d0;
    bool found = false;
    for (std::int64_t shift_c = 0; shift_c <= 4 * N && !found; ++shift_c)
      for (std::int64_t shift_d = 0; shift_d <= 4 * N && !found; ++shift_d) {
        c0 = Integer(static_cast<long>(p.c + shift_c * N));
        d0 = Integer(static_cast<long>(p.d + shift_d * N));
        if (c0 == 0 && d0 == 0) continue;
        Integer g;
        mpz_gcd(g.get_mpz_t(), c0.get_mpz_t(), d0.get_mpz_t());
        found = (g == 1);
      }
    if (!found) throw std::logic_error("no coprime lift found");
    Integer g, d, t;
    // a*d0 - b*c0 = 1 via extended gcd of d0 and c0.
    mpz_gcdext(g.get_mpz_t(), d.get_mpz_t(), t.get_mpz_t(), d0.get_mpz_t(),
               c0.get_mpz_t());
    Mat2 lift{Rational(d), Rational(-t), Rational(c0), Rational(d0)};
    if (lift.det() != 1) throw std::logic_error("lift is not unimodular");
    lifts_.push_back(lift);
  }
}

RatMat ManinBasis::symbol_vector(std::size_t symbol_index) const {
  RatMat v(dim(), 1);
  for (std::size_t r = 0; r < dim(); ++r)
    v.at(r, 0) = reduction_.at(r, symbol_index);
  return v;
}

std::size_t CuspClassSet::class_of(const CuspPoint& cusp) const {
  for (std::size_t k = 0; k < reps.size(); ++k)
    if (cusps_equivalent(level, reps[k], cusp)) return k;
  throw std::logic_error("cusp matches no class representative");
}

ModularSymbolSpace build_space(std::int64_t N) {
  ManinBasis basis(N);
  const std::size_t mu = basis.symbol_count();

  CuspClassSet cusps;
  cusps.level = N;
  std::vector<std::pair<std::size_t, std::size_t>> ends(mu);
  for (std::size_t s = 0; s < mu; ++s) {
    const Mat2& g = basis.symbol_lift(s);
    auto e = integral_entries(g);
    CuspPoint at_inf = CuspPoint::of(e[0], e[2]);  // g(oo) = a/c
    CuspPoint at_zero = CuspPoint::of(e[1], e[3]);  // g(0) = b/d
    auto locate = [&cusps](const CuspPoint& c) {
      for (std::size_t k = 0; k < cusps.reps.size(); ++k)
        if (cusps_equivalent(cusps.level, cusps.reps[k], c)) return k;
      cusps.reps.push_back(c);
      return cusps.reps.size() - 1;
    };
    ends[s] = {locate(at_inf), locate(at_zero)};
  }
  cusps.boundary_symbols = RatMat(cusps.reps.size(), mu);
  for (std::size_t s = 0; s < mu; ++s) {
    cusps.boundary_symbols.at(ends[s].first, s) += 1;
    cusps.boundary_symbols.at(ends[s].second, s) -= 1;
  }
  // The boundary kills the relations, so it factors through the quotient.
  RatMat on_relations =
      cusps.boundary_symbols * basis.relations().transpose();
  if (!on_relations.is_zero())
    throw std::logic_error("boundary does not vanish on the relations");

  cusps.boundary_basis = RatMat(cusps.reps.size(), basis.dim());
  for (std::size_t k = 0; k < basis.dim(); ++k)
    for (std::size_t r = 0; r < cusps.reps.size(); ++r)
      cusps.boundary_basis.at(r, k) =
          cusps.boundary_symbols.at(r, basis.basis_symbols()[k]);

  return ModularSymbolSpace{std::move(basis), std::move(cusps)};
}

namespace {

// Adds the Manin symbols of the unimodular path chain {oo, p/q} to acc,
// weighted. Segment k of the chain is the path between consecutive
// continued fraction convergents p_{k-1}/q_{k-1} -> p_k/q_k, realized by
// the matrix [[p_k, p_{k-1}], [q_k, q_{k-1}]] with the source column
// negated when the determinant is -1.
void accumulate_infinity_path(const ManinBasis& basis, const CuspPoint& target,
                              RatMat& acc, const Rational& weight) {
  if (target.is_infinity()) return;
  const P1Table& p1 = basis.symbols();
  const std::int64_t level = basis.level();
  Integer N(static_cast<long>(level));
  auto add_symbol = [&](const Integer& qdst, const Integer& qsrc, bool flip) {
    Integer c = qdst, d = flip ? Integer(-qsrc) : qsrc;
    std::size_t idx;
    if (level == 1) {
      idx = 0;
    } else {
      Integer cm, dm;
      mpz_fdiv_r(cm.get_mpz_t(), c.get_mpz_t(), N.get_mpz_t());
      mpz_fdiv_r(dm.get_mpz_t(), d.get_mpz_t(), N.get_mpz_t());
      idx = p1.index_of(p1_canonicalize(level, cm.get_si(), dm.get_si()));
    }
    acc.at(idx, 0) += weight;
  };
  Integer p = target.num, q = target.den;  // q > 0, lowest terms
  Integer p_km1(1), q_km1(0);              // convergent at k-1 (oo)
  Integer p_km2(0), q_km2(1);
  std::size_t k = 0;
  while (true) {
    Integer a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    Integer pk = a * p_km1 + p_km2;
    Integer qk = a * q_km1 + q_km2;
    // det [[p_k, p_{k-1}], [q_k, q_{k-1}]] = (-1)^{k+1}
    add_symbol(qk, q_km1, /*flip=*/k % 2 == 0);
    p_km2 = p_km1;
    q_km2 = q_km1;
    p_km1 = pk;
    q_km1 = qk;
    if (r == 0) break;
    p = q;
    q = r;
    ++k;
  }
  if (p_km1 != target.num || q_km1 != target.den)
    throw std::logic_error("continued fraction chain missed its target");
}

}  // namespace

RatMat path_reduce(const ManinBasis& basis, const CuspPoint& alpha,
                   const CuspPoint& beta) {
  // {alpha, beta} = {oo, beta} - {oo, alpha}
  RatMat acc(basis.symbol_count(), 1);
  accumulate_infinity_path(basis, beta, acc, Rational(1));
  accumulate_infinity_path(basis, alpha, acc, Rational(-1));
  return basis.reduction() * acc;
}

HeckeMatrix hecke_matrix(const CosetDecomposition& dec, const ManinBasis& basis) {
  const CongruenceSubgroup& group = dec.group();
  Integer D = dec.a().det().get_num();
  Integer N(static_cast<long>(basis.level()));
  Integer g;
  mpz_gcd(g.get_mpz_t(), D.get_mpz_t(), N.get_mpz_t());
  if (g != 1)
    throw BadDeterminantError("operator determinant must be coprime to the level");
  std::int64_t group_level = group.kind() == GroupKind::Full ? 1 : group.level();
  if (group_level != basis.level())
    throw GroupMismatchError("group level differs from basis level");

  std::vector<Mat2> left_reps = left_coset_reps(group, dec.a());
  if (left_reps.size() != dec.degree())
    throw std::logic_error("left and right coset counts differ");

  HeckeMatrix out;
  out.label = "[" + to_string(dec.a()) + "]";
  out.mat = RatMat(basis.dim(), basis.dim());
  for (std::size_t col = 0; col < basis.dim(); ++col) {
    const Mat2& lift = basis.symbol_lift(basis.basis_symbols()[col]);
    auto e = integral_entries(lift);
    CuspPoint from = CuspPoint::of(e[1], e[3]);  // g(0)
    CuspPoint to = CuspPoint::of(e[0], e[2]);    // g(oo)
    RatMat acc(basis.dim(), 1);
    for (const Mat2& b : left_reps) {
      RatMat term =
          path_reduce(basis, apply_moebius(b, from), apply_moebius(b, to));
      acc = acc + term;
    }
    for (std::size_t r = 0; r < basis.dim(); ++r) out.mat.at(r, col) = acc.at(r, 0);
  }
  if (!out.mat.is_integral())
    throw std::logic_error("Hecke matrix has a non-integer entry");
  return out;
}

RatMat hecke_matrix_elem(const HeckeElement& elem, const ManinBasis& basis) {
  RatMat acc(basis.dim(), basis.dim());
  for (const auto& [label, term] : elem.terms()) {
    HeckeMatrix m = hecke_matrix(term.first.decomposition(), basis);
    acc = acc + Rational(static_cast<long>(term.second)) * m.mat;
  }
  return acc;
}

RatMat cusp_action(const CongruenceSubgroup& group, const CuspClassSet& cusps,
                   const Mat2& a) {
  std::vector<Mat2> left_reps = left_coset_reps(group, a);
  RatMat out(cusps.reps.size(), cusps.reps.size());
  for (std::size_t col = 0; col < cusps.reps.size(); ++col)
    for (const Mat2& b : left_reps) {
      std::size_t img = cusps.class_of(apply_moebius(b, cusps.reps[col]));
      out.at(img, col) += 1;
    }
  return out;
}

RatMat cuspidal_subspace(const ManinBasis& basis, const CuspClassSet& cusps) {
  if (cusps.boundary_basis.cols() != basis.dim())
    throw GroupMismatchError("boundary map does not match the basis");
  return kernel_basis(cusps.boundary_basis);
}

RatMat restrict_to_subspace(const RatMat& T, const RatMat& subspace) {
  return solve_exact(subspace, T * subspace);
}

EigenData eigen_data(const RatMat& m) {
  EigenData out;
  out.charpoly = char_poly(m);
  for (const Rational& c : out.charpoly)
    if (!is_integer(c))
      throw std::logic_error("characteristic polynomial is not integral");
  out.eigenvalues = integer_roots(out.charpoly);
  return out;
}

Integer EllipticCurve::discriminant() const {
  Integer b2 = a1 * a1 + 4 * a2;
  Integer b4 = 2 * a4 + a1 * a3;
  Integer b6 = a3 * a3 + 4 * a6;
  Integer b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

EllipticCurve curve_11a1() {
  return EllipticCurve{Integer(0), Integer(-1), Integer(1), Integer(-10),
                       Integer(-20)};
}

std::int64_t ap_oracle(const EllipticCurve& curve, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("p must be a prime");
  for (std::int64_t t = 2; t * t <= p; ++t)
    if (p % t == 0) throw std::invalid_argument("p must be a prime");
  Integer P(static_cast<long>(p));
  Integer disc = curve.discriminant();
  if (disc % P == 0)
    throw BadReductionError("curve has bad reduction at " + std::to_string(p));
  auto red = [&](const Integer& v) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), P.get_mpz_t());
    return r.get_si();
  };
  std::int64_t a1 = red(curve.a1), a2 = red(curve.a2), a3 = red(curve.a3);
  std::int64_t a4 = red(curve.a4), a6 = red(curve.a6);
  std::int64_t count = 1;  // the point at infinity
  for (std::int64_t x = 0; x < p; ++x)
    for (std::int64_t y = 0; y < p; ++y) {
      std::int64_t lhs = (y * y + a1 * x * y + a3 * y) % p;
      std::int64_t rhs = (((x * x % p) * x + a2 * x * x + a4 * x + a6) % p + p) % p;
      if ((lhs % p + p) % p == rhs) ++count;
    }
  return p + 1 - count;
}

CheckReport pairing_adjointness_check(std::int64_t N, const Mat2& a) {
  CheckReport report;
  report.name = "pairing-adjointness";
  CongruenceSubgroup group =
      (N == 1) ? CongruenceSubgroup::sl2z() : CongruenceSubgroup::gamma0(N);
  ModularSymbolSpace space = build_space(N);
  HeckeMatrix M = hecke_matrix(decompose(group, a), space.basis);
  HeckeMatrix M_adj = hecke_matrix(decompose(group, a.adjugate()), space.basis);
  report.require(M.mat == M_adj.mat,
                 "adjoint coset acts by a different matrix");
  // <T x, y> = <x, T' y> for the coordinate pairing, with the dual action
  // by the transpose of the adjoint-coset matrix.
  RatMat Mt = M_adj.mat.transpose();
  for (std::size_t r = 0; r < space.basis.dim(); ++r)
    for (std::size_t s = 0; s < space.basis.dim(); ++s) {
      // <T e_r, e_s> = (M)_{s r}; <e_r, T' e_s> = (M'^T)_{r s}
      report.require(M.mat.at(s, r) == Mt.at(r, s),
                     "pairing identity fails at (" + std::to_string(r) + "," +
                         std::to_string(s) + ")");
    }
  return report;
}

CheckReport ring_hom_check(std::int64_t N, const HeckeElement& A,
                           const HeckeElement& B) {
  CheckReport report;
  report.name = "ring-hom";
  ModularSymbolSpace space = build_space(N);
  RatMat ma = hecke_matrix_elem(A, space.basis);
  RatMat mb = hecke_matrix_elem(B, space.basis);
  HeckeElement prod = hecke_mul(A, B);
  RatMat mprod = hecke_matrix_elem(prod, space.basis);
  report.require(mprod == ma * mb, "matrix(A*B) != matrix(A) matrix(B)");
  report.require(mprod == mb * ma, "matrix(A*B) != matrix(B) matrix(A)");
  return report;
}

}  // namespace hecke
