#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecke/bisets.hpp"
#include "hecke/rng.hpp"

namespace hecke {

// Coefficient value: one Gaussian rational (trivial variant) or a Gaussian
// rational valued function on a finite set (finite-set variant), stored
// componentwise.
struct CoeffValue {
  std::vector<GaussRat> comp;

  bool operator==(const CoeffValue& other) const { return comp == other.comp; }
  bool operator!=(const CoeffValue& other) const { return !(*this == other); }
};

enum class CoefficientVariant { Trivial, FiniteSet };

// The coefficient algebra B at desk scale. Trivial: Gaussian rationals with
// the trivial action. FiniteSet: functions on P^1(F_m) with the pointwise
// product and the fractional-linear action of matrices reduced mod m. The
// action table is populated lazily per group element encountered; elements
// whose entries cannot be reduced mod m (denominator or determinant sharing
// a factor with m) are rejected, which is what keeps a finite-set action
// available at all: no global action on a finite set restricts nontrivially
// to the whole commensurator.
class CoefficientAlgebra {
 public:
  static CoefficientAlgebra trivial();
  static CoefficientAlgebra finite_set(std::int64_t modulus);

  CoefficientVariant variant() const { return state_->variant; }
  std::int64_t modulus() const { return state_->modulus; }
  std::size_t dim() const { return state_->dim; }

  bool compatible(const CoefficientAlgebra& other) const {
    return state_->variant == other.state_->variant &&
           state_->modulus == other.state_->modulus;
  }

  CoeffValue zero() const;
  CoeffValue one() const;
  CoeffValue scalar(const GaussRat& z) const;  // constant function
  CoeffValue delta(std::size_t index, const GaussRat& z) const;

  bool is_zero(const CoeffValue& v) const;
  CoeffValue add(const CoeffValue& x, const CoeffValue& y) const;
  CoeffValue sub(const CoeffValue& x, const CoeffValue& y) const;
  CoeffValue neg(const CoeffValue& x) const;
  CoeffValue mul(const CoeffValue& x, const CoeffValue& y) const;
  // The involution: componentwise conjugation.
  CoeffValue conj(const CoeffValue& x) const;
  // The S-action. Throws DomainMismatchError if the element has no entry
  // in the action table and none can be derived (non-reducible mod m).
  CoeffValue act(const Mat2& x, const CoeffValue& v) const;

  // Spot check of the action table: the permutation of x*y equals the
  // composite of the permutations of x and y.
  bool composition_holds(const Mat2& x, const Mat2& y) const;

  CoeffValue random_value(WordSampler& sampler) const;

 private:
  struct State {
    CoefficientVariant variant = CoefficientVariant::Trivial;
    std::int64_t modulus = 0;
    std::size_t dim = 1;
    // lazily populated action table: matrix -> permutation of the point set
    mutable std::map<Mat2, std::vector<std::size_t>> table;
  };

  const std::vector<std::size_t>& permutation_of(const Mat2& x) const;

  std::shared_ptr<State> state_;
};

enum class DomainTag { Group, Coset };

// Finitely supported B-valued function on Gamma or on a double coset
// Gamma a Gamma (carrying its decomposition). Zero values are pruned.
class FinSuppFunction {
 public:
  static FinSuppFunction on_group(CongruenceSubgroup group,
                                  CoefficientAlgebra alg);
  static FinSuppFunction on_coset(CosetDecompositionPtr dec,
                                  CoefficientAlgebra alg);

  DomainTag tag() const { return tag_; }
  const CongruenceSubgroup& group() const { return group_; }
  const CosetDecompositionPtr& dec() const { return dec_; }
  const CoefficientAlgebra& algebra() const { return alg_; }
  const std::map<Mat2, CoeffValue>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  // Adds value at the point x; validates domain membership.
  void add_point(const Mat2& x, const CoeffValue& value);
  CoeffValue value_at(const Mat2& x) const;

  friend bool operator==(const FinSuppFunction& x, const FinSuppFunction& y);
  friend bool operator!=(const FinSuppFunction& x, const FinSuppFunction& y) {
    return !(x == y);
  }

 private:
  DomainTag tag_ = DomainTag::Group;
  CongruenceSubgroup group_ = CongruenceSubgroup::sl2z();
  CosetDecompositionPtr dec_;  // null for Group
  CoefficientAlgebra alg_ = CoefficientAlgebra::trivial();
  std::map<Mat2, CoeffValue> support_;
};

// f * Psi (xi) = sum_gamma f(gamma) gamma(Psi(gamma^{-1} xi)); f lives on
// Gamma, Psi on Gamma or on a double coset. Also the convolution product of
// C_c(Gamma, B) when both live on Gamma.
FinSuppFunction convolve_left(const FinSuppFunction& f,
                              const FinSuppFunction& psi);

// Psi * f (xi) = sum_gamma Psi(xi gamma) (xi gamma)(f(gamma^{-1})).
FinSuppFunction convolve_right(const FinSuppFunction& psi,
                               const FinSuppFunction& f);

// The involution of C_c(Gamma, B): f^*(gamma) = gamma(f(gamma^{-1})^*).
FinSuppFunction group_involution(const FinSuppFunction& f);

// <Phi, Psi>(delta) = sum_xi xi^{-1}(Phi(xi)^* Psi(xi delta)), a function
// on Gamma. Both arguments on the same double coset.
FinSuppFunction inner_product(const FinSuppFunction& phi,
                              const FinSuppFunction& psi);

// A vector of d functions on Gamma: the free module picture.
struct FreeModuleVector {
  CosetDecompositionPtr dec;
  std::vector<FinSuppFunction> comp;

  friend bool operator==(const FreeModuleVector& x, const FreeModuleVector& y) {
    return x.comp == y.comp;
  }
  friend bool operator!=(const FreeModuleVector& x, const FreeModuleVector& y) {
    return !(x == y);
  }
};

FreeModuleVector free_zero(const CosetDecompositionPtr& dec,
                           const CoefficientAlgebra& alg);

// alpha(Psi)_i(delta) = g_i^{-1}(Psi(g_i delta)).
FreeModuleVector alpha_coset(const FinSuppFunction& psi);

// <Phi, Psi> = sum_i Phi_i^* * Psi_i in C_c(Gamma, B).
FinSuppFunction free_inner_product(const FreeModuleVector& phi,
                                   const FreeModuleVector& psi);

// The left action of C_c(Gamma, B) on the free module:
// (t(f) Psi)_i(delta) =
//   sum_gamma g_i^{-1}(f(gamma)) t_i(gamma^{-1})^{-1}(
//       Psi_{gamma^{-1}(i)}(t_i(gamma^{-1}) delta)).
FreeModuleVector free_act_function(const FinSuppFunction& f,
                                   const FreeModuleVector& psi);

// The covariant pieces: (t(b) Psi)_i(delta) = g_i^{-1}(b) Psi_i(delta) and
// (t(u_gamma) Psi)_i(delta) = t_i(gamma^{-1})^{-1}(
//     Psi_{gamma^{-1}(i)}(t_i(gamma^{-1}) delta)).
FreeModuleVector free_act_scalar(const CoeffValue& b,
                                 const FreeModuleVector& psi);
FreeModuleVector free_act_unitary(const Mat2& gamma,
                                  const FreeModuleVector& psi);

// Componentwise right action (Psi * f)_i = Psi_i * f.
FreeModuleVector free_act_right(const FreeModuleVector& psi,
                                const FinSuppFunction& f);

// B-valued function on the Gamma-product of two double cosets, supported on
// canonical forms.
class ProductFunction {
 public:
  ProductFunction(CosetDecompositionPtr left, CosetDecompositionPtr right,
                  CoefficientAlgebra alg)
      : left_(std::move(left)), right_(std::move(right)), alg_(std::move(alg)) {}

  const CosetDecompositionPtr& left() const { return left_; }
  const CosetDecompositionPtr& right() const { return right_; }
  const CoefficientAlgebra& algebra() const { return alg_; }
  const std::map<ProductElement, CoeffValue>& support() const {
    return support_;
  }

  void add_point(const ProductElement& x, const CoeffValue& value);
  CoeffValue value_at(const ProductElement& x) const;

  friend bool operator==(const ProductFunction& x, const ProductFunction& y) {
    return x.support_ == y.support_;
  }
  friend bool operator!=(const ProductFunction& x, const ProductFunction& y) {
    return !(x == y);
  }

 private:
  CosetDecompositionPtr left_, right_;
  CoefficientAlgebra alg_;
  std::map<ProductElement, CoeffValue> support_;
};

// alpha(Phi tensor Psi)[v, w] = sum_gamma Phi(v gamma) (v gamma)(
//     Psi(gamma^{-1} w)), with B tensor_B B collapsed to B by multiplication.
ProductFunction alpha_tensor(const FinSuppFunction& phi,
                             const FinSuppFunction& psi);

// <A, B>(delta) = sum over classes of m(class)^{-1}(A^* B(class delta)).
FinSuppFunction product_inner(const ProductFunction& x,
                              const ProductFunction& y);

ProductFunction product_act_left(const FinSuppFunction& f,
                                 const ProductFunction& x);
ProductFunction product_act_right(const ProductFunction& x,
                                  const FinSuppFunction& f);

// The inner product on the algebraic tensor product:
// <Phi tensor Psi, Phi' tensor Psi'> = <Psi, <Phi, Phi'> * Psi'>.
FinSuppFunction tensor_inner(const FinSuppFunction& phi,
                             const FinSuppFunction& psi,
                             const FinSuppFunction& phi2,
                             const FinSuppFunction& psi2);

// Pass/fail record of one named verification.
struct CheckReport {
  std::string name;
  std::size_t trials = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
  void require(bool ok, const std::string& what) {
    ++trials;
    if (!ok) failures.push_back(what);
  }
};

// Verifies the covariant representation on random vectors: multiplicativity
// of u_gamma, compatibility of b with u_gamma, and reassembly of the full
// action from the covariant pair.
CheckReport covariant_rep_check(const CoefficientAlgebra& alg,
                                const CosetDecompositionPtr& dec,
                                std::uint64_t seed, std::size_t trials);

// Verifies, on a spanning set of single-point elements, that the tensor
// product module of Gamma a Gamma and Gamma b Gamma decomposes as the direct
// sum of m_k copies of the Gamma z_k Gamma module: inner products and both
// module actions agree after the omega relabeling.
CheckReport heckemod_check(const CongruenceSubgroup& group, const Mat2& a,
                           const Mat2& b, const CoefficientAlgebra& alg,
                           std::uint64_t seed);

// Random single-point support generators for tests and verification suites.
FinSuppFunction random_group_function(const CongruenceSubgroup& group,
                                      const CoefficientAlgebra& alg,
                                      WordSampler& sampler,
                                      std::size_t max_support);
FinSuppFunction random_coset_function(const CosetDecompositionPtr& dec,
                                      const CoefficientAlgebra& alg,
                                      WordSampler& sampler,
                                      std::size_t max_support);

}  // namespace hecke
