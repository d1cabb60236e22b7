#pragma once

#include <map>
#include <memory>
#include <vector>

#include "hecke/congruence.hpp"
#include "hecke/mat2.hpp"

namespace hecke {

// Canonical key of a right coset x*Gamma of integral matrices:
//   hnf  - the column Hermite form of x (classifies x mod SL2(Z));
//   p1   - for Gamma0(N), the P^1(Z/N) class of the first column of
//          hnf^{-1} * x, which separates the SL2(Z)-coset into its
//          Gamma0(N)-cosets. Trivial for SL2(Z).
// Two integral matrices x, y satisfy x^{-1} y in Gamma iff their keys agree.
struct CosetKey {
  Mat2 hnf;
  ProjectivePoint p1;

  friend bool operator==(const CosetKey& x, const CosetKey& y) {
    return x.hnf == y.hnf && x.p1 == y.p1;
  }
  friend bool operator<(const CosetKey& x, const CosetKey& y) {
    if (x.hnf != y.hnf) return x.hnf < y.hnf;
    return x.p1 < y.p1;
  }
};

CosetKey coset_key(const CongruenceSubgroup& group, const Mat2& x);

// x in Gamma intersect a*Gamma*a^{-1}, the stabilizer whose index in Gamma
// is the number of right cosets of Gamma*a*Gamma.
bool stabilizer_contains(const CongruenceSubgroup& group, const Mat2& a,
                         const Mat2& x);

constexpr long kDefaultCosetCap = 10000;

// The decomposition Gamma*a*Gamma = union of a_i*Gamma with a_i = delta_i*a,
// delta_1 = identity. Representatives are kept in the order: a first, then
// sorted by canonical coset key.
class CosetDecomposition {
 public:
  CosetDecomposition(CongruenceSubgroup group, Mat2 a, std::vector<Mat2> reps,
                     std::vector<CosetKey> keys);

  const CongruenceSubgroup& group() const { return group_; }
  const Mat2& a() const { return a_; }
  std::size_t degree() const { return reps_.size(); }
  const std::vector<Mat2>& reps() const { return reps_; }
  const std::vector<Mat2>& deltas() const { return deltas_; }
  const std::vector<CosetKey>& keys() const { return keys_; }

  // Index i with x in a_i*Gamma; throws NotInCosetError if x is in none.
  std::size_t coset_index(const Mat2& x) const;
  bool contains(const Mat2& x) const;

  // Full invariant check: pairwise distinct cosets by the membership test,
  // delta_i = a_i * a^{-1} in Gamma, delta_1 = identity, and closure of the
  // coset list under left multiplication by the group generators.
  void verify() const;

 private:
  CongruenceSubgroup group_;
  Mat2 a_;
  std::vector<Mat2> reps_;
  std::vector<Mat2> deltas_;
  std::vector<CosetKey> keys_;
  std::map<CosetKey, std::size_t> key_index_;
};

// Breadth-first enumeration over left multiplication by the generators of
// the group, starting from a. Throws CapExceededError if more than cap
// cosets appear, NonIntegralError if a is not integral.
CosetDecomposition decompose(const CongruenceSubgroup& group, const Mat2& a,
                             long cap = kDefaultCosetCap);

// Representatives b_i with Gamma*a*Gamma = disjoint union of Gamma*b_i,
// obtained from the right-coset enumeration of Gamma*adj(a)*Gamma through
// the adjugate anti-automorphism (which preserves Gamma0(N)).
std::vector<Mat2> left_coset_reps(const CongruenceSubgroup& group, const Mat2& a,
                                  long cap = kDefaultCosetCap);

// The permutation i -> gamma(i) with gamma * a_i * Gamma = a_{gamma(i)} * Gamma
// and the corrections t_i(gamma) = a_{gamma(i)}^{-1} * gamma * a_i.
struct Cocycle {
  Mat2 gamma;
  std::vector<std::size_t> perm;
  std::vector<Mat2> values;
};

// Throws NotInGroupError if gamma is not in the group.
Cocycle cocycle(const CosetDecomposition& dec, const Mat2& gamma);

using CosetDecompositionPtr = std::shared_ptr<const CosetDecomposition>;

}  // namespace hecke
