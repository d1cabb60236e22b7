#pragma once

#include <vector>

#include "hecke/hecke_ring.hpp"

namespace hecke {

// Elements of the Gamma-product (Gamma a Gamma) x_Gamma (Gamma b Gamma) in
// canonical form: [v, w] = [g_i, h_j * delta] with i, j indices into the two
// decompositions and delta in Gamma. The form is unique per equivalence
// class of the relation (v, w) ~ (v*gamma, gamma^{-1}*w).
struct ProductElement {
  std::size_t i = 0;
  std::size_t j = 0;
  Mat2 delta;

  friend bool operator==(const ProductElement& x, const ProductElement& y) {
    return x.i == y.i && x.j == y.j && x.delta == y.delta;
  }
  friend bool operator<(const ProductElement& x, const ProductElement& y) {
    if (x.i != y.i) return x.i < y.i;
    if (x.j != y.j) return x.j < y.j;
    return x.delta < y.delta;
  }
};

// A formal finite disjoint union of double cosets, anchored in GL2(Q)+ by
// inclusion. Bi-Gamma-sets are never materialized as element collections;
// everything is symbolic on matrix representatives.
struct AnchoredBiSet {
  std::vector<DoubleCoset> components;
};

// A point of such a union: which component, and a matrix inside it.
struct BiSetElement {
  std::size_t component = 0;
  Mat2 value;
};

// Finds i with g_i^{-1} v in Gamma, then j and delta with
// (g_i^{-1} v) w = h_j delta. Throws NotInCosetError when v or w is not in
// the respective double coset. The anchor is preserved exactly:
// g_i * h_j * delta = v * w.
ProductElement canonicalize(const CosetDecomposition& left,
                            const CosetDecomposition& right, const Mat2& v,
                            const Mat2& w);

// The anchor of a canonical form: g_i * h_j * delta.
Mat2 product_anchor(const CosetDecomposition& left,
                    const CosetDecomposition& right, const ProductElement& x);

// The left action gamma(i, j) = (gamma(i), t^g_i(gamma)(j)) on I x J.
std::pair<std::size_t, std::size_t> label_action(
    const CosetDecomposition& left, const CosetDecomposition& right,
    const Mat2& gamma, std::pair<std::size_t, std::size_t> ij);

// Left and right translations on canonical forms.
ProductElement act_left(const CosetDecomposition& left,
                        const CosetDecomposition& right, const Mat2& gamma,
                        const ProductElement& x);
ProductElement act_right(const CosetDecomposition& left,
                         const CosetDecomposition& right,
                         const ProductElement& x, const Mat2& delta);

// The image of gamma * z_(k,l) * delta under the bi-equivariant bijection:
// canonicalize(gamma * g_{i(k,l)}, h_{j(k,l)} * delta).
ProductElement omega(const ProductWitness& witness, std::size_t k, std::size_t l,
                     const Mat2& gamma, const Mat2& delta);

// The finite bijection (n, k, l) -> gamma^k_n (i(k,l), j(k,l)) onto I x J.
// Returns the images in the deterministic order of (k, l, n) loops; callers
// assert distinctness and surjectivity.
std::vector<std::pair<std::size_t, std::size_t>> witness_label_images(
    const ProductWitness& witness);

// Checks that the map above is a bijection onto I x J.
bool witness_bijection_holds(const ProductWitness& witness);

}  // namespace hecke
