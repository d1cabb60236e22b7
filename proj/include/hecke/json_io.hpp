#pragma once

#include <json.hpp>

#include "hecke/congruence.hpp"
#include "hecke/hecke_ring.hpp"
#include "hecke/mat2.hpp"

namespace hecke {

// Insertion-ordered JSON keeps output byte-identical across runs.
using Json = nlohmann::ordered_json;

// {"m": [["a","b"],["c","d"]]} with entries as decimal strings ("p/q" for
// non-integers).
Json mat2_to_json(const Mat2& m);
Mat2 mat2_from_json(const Json& j);

// {"kind": "gamma0", "level": 11} (kinds: sl2z, gamma0, gamma1, gamma).
Json group_to_json(const CongruenceSubgroup& g);
CongruenceSubgroup group_from_json(const Json& j);

Json decomposition_to_json(const CosetDecomposition& dec);
Json witness_to_json(const ProductWitness& w);
Json hecke_element_to_json(const HeckeElement& e);

}  // namespace hecke
