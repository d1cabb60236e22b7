#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/bimodule.hpp"
#include "hecke/hecke_ring.hpp"
#include "hecke/linalg.hpp"

namespace hecke {

// A point of P^1(Q): num/den in lowest terms with den >= 0; infinity is
// (1 : 0). Doubles as a cusp of the modular curve.
struct CuspPoint {
  Integer num{0};
  Integer den{1};

  static CuspPoint infinity() { return {Integer(1), Integer(0)}; }
  static CuspPoint of(Integer n, Integer d);

  bool is_infinity() const { return den == 0; }

  friend bool operator==(const CuspPoint& x, const CuspPoint& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator<(const CuspPoint& x, const CuspPoint& y) {
    if (int s = cmp(x.num, y.num)) return s < 0;
    return cmp(x.den, y.den) < 0;
  }
};

std::string to_string(const CuspPoint& x);

// Fractional-linear action of an integral matrix of positive determinant.
CuspPoint apply_moebius(const Mat2& m, const CuspPoint& x);

// Gamma0(N)-equivalence of cusps, decided by the classical congruence
// criterion (see Cremona, Algorithms for Modular Elliptic Curves, Prop.
// 2.2.3); cross-checked in tests against the cusp-count formula and
// invariance under random group elements.
bool cusps_equivalent(std::int64_t N, const CuspPoint& x, const CuspPoint& y);

// Weight-2 Manin symbol space for Gamma0(N): one generator per P^1(Z/N)
// point, modulo the two-term and three-term relations x + x.sigma = 0,
// x + x.tau + x.tau^2 = 0. The chosen basis is the set of free columns of
// the exact row reduction of the relation matrix.
class ManinBasis {
 public:
  explicit ManinBasis(std::int64_t N);

  std::int64_t level() const { return N_; }
  const P1Table& symbols() const { return *p1_; }
  std::size_t symbol_count() const { return p1_->size(); }
  std::size_t dim() const { return basis_symbols_.size(); }
  const std::vector<std::size_t>& basis_symbols() const { return basis_symbols_; }
  const RatMat& relations() const { return relations_; }

  // dim x mu matrix expressing each generator in the chosen basis.
  const RatMat& reduction() const { return reduction_; }
  // Column of reduction() as a dim x 1 vector.
  RatMat symbol_vector(std::size_t symbol_index) const;

  // A lift of the symbol to SL2(Z) with bottom row congruent to (c, d).
  const Mat2& symbol_lift(std::size_t symbol_index) const { return lifts_[symbol_index]; }

 private:
  std::int64_t N_;
  std::shared_ptr<const P1Table> p1_;
  RatMat relations_;
  RatMat reduction_;
  std::vector<std::size_t> basis_symbols_;
  std::vector<Mat2> lifts_;
};

// Cusp classes of X0(N) and the boundary map from modular symbols.
struct CuspClassSet {
  std::int64_t level = 1;
  std::vector<CuspPoint> reps;
  RatMat boundary_symbols;  // classes x mu, boundary of each generator
  RatMat boundary_basis;    // classes x dim, induced on the chosen basis

  std::size_t class_of(const CuspPoint& cusp) const;
};

struct ModularSymbolSpace {
  ManinBasis basis;
  CuspClassSet cusps;
};

ModularSymbolSpace build_space(std::int64_t N);

// {alpha, beta} as a vector over the chosen basis, via the continued
// fraction decomposition into unimodular paths (Manin's trick; Cremona
// Ch. 2.1-2.2). Additive: {a,b} + {b,c} = {a,c}.
RatMat path_reduce(const ManinBasis& basis, const CuspPoint& alpha,
                   const CuspPoint& beta);

struct HeckeMatrix {
  std::string label;
  RatMat mat;             // integer entries on the full space
  bool cuspidal = false;  // set by restrict helpers
};

// The operator of the double coset on the full modular symbol space:
// x -> sum_i {b_i alpha, b_i beta} over representatives b_i of the left
// cosets Gamma b_i of Gamma a Gamma, realizing pullback-then-fiber-sum of
// the covering correspondence at chain level. Requires gcd(det a, N) = 1.
HeckeMatrix hecke_matrix(const CosetDecomposition& dec, const ManinBasis& basis);

// Integer matrix of a Hecke ring element (linear combination of cosets).
RatMat hecke_matrix_elem(const HeckeElement& elem, const ManinBasis& basis);

// Induced action on cusp classes: [cusp] -> sum_i [b_i cusp].
RatMat cusp_action(const CongruenceSubgroup& group, const CuspClassSet& cusps,
                   const Mat2& a);

// Basis (dim x 2g) of the kernel of the boundary map.
RatMat cuspidal_subspace(const ManinBasis& basis, const CuspClassSet& cusps);

// T restricted to the column span of subspace (full column rank).
RatMat restrict_to_subspace(const RatMat& T, const RatMat& subspace);

struct EigenData {
  std::vector<Rational> charpoly;  // c_0 .. c_n, monic integer
  std::vector<std::pair<Integer, std::size_t>> eigenvalues;  // with multiplicity
};

EigenData eigen_data(const RatMat& m);

// Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct EllipticCurve {
  Integer a1, a2, a3, a4, a6;
  Integer discriminant() const;
};

EllipticCurve curve_11a1();  // y^2 + y = x^3 - x^2 - 10x - 20

// a_p = p + 1 - #E(F_p) by exhaustive point count. Throws
// BadReductionError at primes of bad reduction.
std::int64_t ap_oracle(const EllipticCurve& curve, std::int64_t p);

// Verifies <T_a x, y> = <x, T_a' y> for the coordinate pairing with the
// dual action by transposition, where a' = adj(a) represents the adjoint
// coset; concretely, the matrices of a and adj(a) agree.
CheckReport pairing_adjointness_check(std::int64_t N, const Mat2& a);

// Verifies matrix(A * B) = matrix(A) matrix(B) = matrix(B) matrix(A) on the
// full space (all term determinants must be coprime to N).
CheckReport ring_hom_check(std::int64_t N, const HeckeElement& A,
                           const HeckeElement& B);

}  // namespace hecke
