#include "hecke/bisets.hpp"

#include <set>

#include "hecke/errors.hpp"

namespace hecke {

ProductElement canonicalize(const CosetDecomposition& left,
                            const CosetDecomposition& right, const Mat2& v,
                            const Mat2& w) {
  if (!left.contains(v))
    throw NotInCosetError("left factor is not in its double coset");
  std::size_t i = left.coset_index(v);
  Mat2 gamma_prime = left.reps()[i].inverse() * v;
  Mat2 shifted = gamma_prime * w;
  if (!right.contains(shifted))
    throw NotInCosetError("right factor is not in its double coset");
  std::size_t j = right.coset_index(shifted);
  Mat2 delta = right.reps()[j].inverse() * shifted;
  return ProductElement{i, j, delta};
}

Mat2 product_anchor(const CosetDecomposition& left,
                    const CosetDecomposition& right, const ProductElement& x) {
  return left.reps()[x.i] * right.reps()[x.j] * x.delta;
}

std::pair<std::size_t, std::size_t> label_action(
    const CosetDecomposition& left, const CosetDecomposition& right,
    const Mat2& gamma, std::pair<std::size_t, std::size_t> ij) {
  if (!left.group().contains(gamma))
    throw NotInGroupError("label_action argument is not in the group");
  Mat2 moved = gamma * left.reps()[ij.first];
  std::size_t i2 = left.coset_index(moved);
  Mat2 t = left.reps()[i2].inverse() * moved;  // t^g_i(gamma), in Gamma
  Mat2 moved_j = t * right.reps()[ij.second];
  std::size_t j2 = right.coset_index(moved_j);
  return {i2, j2};
}

ProductElement act_left(const CosetDecomposition& left,
                        const CosetDecomposition& right, const Mat2& gamma,
                        const ProductElement& x) {
  return canonicalize(left, right, gamma * left.reps()[x.i],
                      right.reps()[x.j] * x.delta);
}

ProductElement act_right(const CosetDecomposition& left,
                         const CosetDecomposition& right,
                         const ProductElement& x, const Mat2& delta) {
  (void)left;
  (void)right;
  return ProductElement{x.i, x.j, x.delta * delta};
}

ProductElement omega(const ProductWitness& witness, std::size_t k, std::size_t l,
                     const Mat2& gamma, const Mat2& delta) {
  const WitnessOrbit& orbit = witness.orbits.at(k);
  const auto [i, j] = orbit.pairs.at(l);
  if (!witness.left->group().contains(gamma) ||
      !witness.left->group().contains(delta))
    throw NotInGroupError("omega translations must lie in the group");
  return canonicalize(*witness.left, *witness.right,
                      gamma * witness.left->reps()[i],
                      witness.right->reps()[j] * delta);
}

std::vector<std::pair<std::size_t, std::size_t>> witness_label_images(
    const ProductWitness& witness) {
  std::vector<std::pair<std::size_t, std::size_t>> images;
  for (const WitnessOrbit& orbit : witness.orbits)
    for (const auto& pair : orbit.pairs)
      for (const Mat2& gamma : orbit.transversal)
        images.push_back(label_action(*witness.left, *witness.right, gamma, pair));
  return images;
}

bool witness_bijection_holds(const ProductWitness& witness) {
  auto images = witness_label_images(witness);
  if (images.size() != witness.left->degree() * witness.right->degree())
    return false;
  std::set<std::pair<std::size_t, std::size_t>> distinct(images.begin(),
                                                         images.end());
  return distinct.size() == images.size();
}

}  // namespace hecke
