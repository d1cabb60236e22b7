#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hecke/congruence.hpp"

namespace hecke {

// Deterministic sampler for randomized identity checks. Group elements are
// words of bounded length in the group generators and their inverses;
// coefficients are small rationals. Everything is reproducible from the seed.
class WordSampler {
 public:
  WordSampler(const CongruenceSubgroup& group, std::uint64_t seed,
              int max_len = 6)
      : gens_(group.generators_sym()), eng_(seed), max_len_(max_len) {}

  Mat2 next_word() {
    std::uniform_int_distribution<int> len_dist(0, max_len_);
    std::uniform_int_distribution<std::size_t> pick(0, gens_.size() - 1);
    Mat2 w = Mat2::identity();
    int len = len_dist(eng_);
    for (int k = 0; k < len; ++k) w = w * gens_[pick(eng_)];
    return w;
  }

  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    return dist(eng_);
  }

  Rational next_rational() {
    Rational q(static_cast<long>(next_int(-3, 3)),
               static_cast<long>(next_int(1, 3)));
    q.canonicalize();
    return q;
  }

  GaussRat next_gauss() { return {next_rational(), next_rational()}; }

 private:
  std::vector<Mat2> gens_;
  std::mt19937_64 eng_;
  int max_len_;
};

}  // namespace hecke
