#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hecke/cosets.hpp"

namespace hecke {

// Canonical label of a double coset Gamma*a*Gamma: the least coset key among
// its right cosets. Bi-invariant since the set of right cosets is. For
// SL2(Z) the Smith pair (d1, d2) is carried alongside as a fast path and the
// two must agree as classifiers.
struct DoubleCosetLabel {
  CosetKey min_key;
  bool has_smith = false;
  Integer d1{0}, d2{0};

  friend bool operator==(const DoubleCosetLabel& x, const DoubleCosetLabel& y) {
    return x.min_key == y.min_key;
  }
  friend bool operator<(const DoubleCosetLabel& x, const DoubleCosetLabel& y) {
    return x.min_key < y.min_key;
  }
  std::string to_string() const;
};

class DoubleCoset {
 public:
  DoubleCoset(const CongruenceSubgroup& group, const Mat2& a,
              long cap = kDefaultCosetCap);

  const CongruenceSubgroup& group() const { return dec_->group(); }
  const Mat2& rep() const { return dec_->a(); }
  const DoubleCosetLabel& label() const { return label_; }
  std::size_t degree() const { return dec_->degree(); }
  const CosetDecomposition& decomposition() const { return *dec_; }
  CosetDecompositionPtr decomposition_ptr() const { return dec_; }

  friend bool operator==(const DoubleCoset& x, const DoubleCoset& y) {
    return x.group() == y.group() && x.label_ == y.label_;
  }

 private:
  CosetDecompositionPtr dec_;
  DoubleCosetLabel label_;
};

// b in Gamma*a*Gamma, decided by membership in some right coset of a's
// decomposition; for SL2(Z) the Smith pair must agree with that decision.
bool double_coset_eq(const CongruenceSubgroup& group, const Mat2& a,
                     const Mat2& b, long cap = kDefaultCosetCap);

// The witness data behind a Shimura product [Gamma a Gamma][Gamma b Gamma]:
// per double coset class k, the distinguished right coset z_k*Gamma, the
// multiplicity m_k, the index pairs (i(k,l), j(k,l)) realizing it, and the
// right-coset transversal gamma^k_n of Gamma z_k Gamma.
struct WitnessOrbit {
  Mat2 z;
  std::size_t m = 0;
  std::size_t d = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (i(k,l), j(k,l))
  std::vector<Mat2> transversal;                           // gamma^k_n, n = 1..d
  CosetDecompositionPtr z_dec;
};

struct ProductWitness {
  CosetDecompositionPtr left;   // {g_i : i in I}
  CosetDecompositionPtr right;  // {h_j : j in J}
  std::vector<WitnessOrbit> orbits;

  // sum_k m_k * d_k, which must equal |I| * |J|.
  std::size_t pair_count() const;
  // Checks the counting identity and that every right coset of every class
  // carries exactly m_k of the |I||J| products (well-definedness of m_k).
  void verify() const;
};

// Finite integer combination of double cosets of one group.
class HeckeElement {
 public:
  explicit HeckeElement(CongruenceSubgroup group) : group_(std::move(group)) {}

  const CongruenceSubgroup& group() const { return group_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const DoubleCoset& coset, std::int64_t coeff);
  std::int64_t coeff(const DoubleCosetLabel& label) const;

  const std::map<DoubleCosetLabel, std::pair<DoubleCoset, std::int64_t>>& terms()
      const {
    return terms_;
  }

  friend HeckeElement operator+(const HeckeElement& x, const HeckeElement& y);
  friend HeckeElement operator-(const HeckeElement& x, const HeckeElement& y);
  friend HeckeElement operator*(std::int64_t n, const HeckeElement& x);
  friend bool operator==(const HeckeElement& x, const HeckeElement& y);
  friend bool operator!=(const HeckeElement& x, const HeckeElement& y) {
    return !(x == y);
  }

 private:
  CongruenceSubgroup group_;
  std::map<DoubleCosetLabel, std::pair<DoubleCoset, std::int64_t>> terms_;
};

// The product of Eq-style double coset multiplication: bucket the |I||J|
// products g_i * h_j into right cosets, group those into double cosets,
// count m_k on the distinguished coset, and return sum_k m_k [Gamma z_k Gamma]
// with the full witness.
std::pair<HeckeElement, ProductWitness> shimura_product(const DoubleCoset& A,
                                                        const DoubleCoset& B);

// Bilinear extension of shimura_product.
HeckeElement hecke_mul(const HeckeElement& x, const HeckeElement& y);

// sum over terms of coefficient * coset degree.
std::int64_t degree(const HeckeElement& x);

// Convenience elements.
HeckeElement hecke_unit(const CongruenceSubgroup& group);
// [Gamma diag(1,n) Gamma]
HeckeElement hecke_coset_tn(const CongruenceSubgroup& group, std::int64_t n);
// [Gamma diag(p,p) Gamma]
HeckeElement hecke_coset_tpp(const CongruenceSubgroup& group, std::int64_t p);
// The classical operator T_n: the sum of all double cosets of determinant n,
// i.e. sum over d1 | d2, d1*d2 = n of [Gamma diag(d1,d2) Gamma].
HeckeElement hecke_operator_tn(const CongruenceSubgroup& group, std::int64_t n);

}  // namespace hecke
