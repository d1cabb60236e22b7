#include <doctest.h>

#include "hecke/congruence.hpp"
#include "hecke/errors.hpp"
#include "hecke/rng.hpp"

using namespace hecke;

TEST_CASE("membership predicates") {
  auto g0_11 = CongruenceSubgroup::gamma0(11);
  CHECK(g0_11.contains(mat2_from_string("1,1;0,1")));
  CHECK_FALSE(g0_11.contains(mat2_from_string("0,-1;1,0")));
  CHECK(g0_11.contains(mat2_from_string("1,0;11,1")));
  CHECK_FALSE(g0_11.contains(mat2_from_string("1,0;0,2")));       // det 2
  CHECK_FALSE(g0_11.contains(mat2_from_string("1/2,0;0,2")));     // not integral

  auto full = CongruenceSubgroup::sl2z();
  CHECK(full.contains(gen_s()));
  CHECK(full.contains(gen_t()));

  auto g1_5 = CongruenceSubgroup::gamma1(5);
  CHECK(g1_5.contains(mat2_from_string("1,1;0,1")));
  CHECK(g1_5.contains(mat2_from_string("6,1;5,1")));
  CHECK_FALSE(g1_5.contains(mat2_from_string("2,1;5,3")));  // a not 1 mod 5

  auto gf_3 = CongruenceSubgroup::gamma_full(3);
  CHECK(gf_3.contains(mat2_from_string("1,3;3,10")));
  CHECK_FALSE(gf_3.contains(mat2_from_string("1,1;0,1")));
}

TEST_CASE("index formulas and coset table sizes") {
  CHECK(mu_index(1) == 1);
  CHECK(mu_index(11) == 12);
  CHECK(mu_index(14) == 24);
  CHECK(mu_index(15) == 24);
  CHECK(mu_index(17) == 18);
  // |P^1(Z/N)| = mu(N) for N <= 30
  for (std::int64_t n = 1; n <= 30; ++n)
    CHECK(coset_action(n).size() == static_cast<std::size_t>(mu_index(n)));
  CHECK(coset_action(1).size() == 1);
  CHECK(coset_action(11).size() == 12);

  CHECK(CongruenceSubgroup::sl2z().index() == 1);
  CHECK(CongruenceSubgroup::gamma0(11).index() == 12);
  CHECK(CongruenceSubgroup::gamma1(5).index() == 24);
  CHECK(CongruenceSubgroup::gamma_full(2).index() == 6);
}

TEST_CASE("surface data for the dimension oracle") {
  CHECK(genus_gamma0(1) == 0);
  CHECK(genus_gamma0(11) == 1);
  CHECK(genus_gamma0(14) == 1);
  CHECK(genus_gamma0(15) == 1);
  CHECK(genus_gamma0(17) == 1);
  CHECK(genus_gamma0(37) == 2);
  CHECK(cusp_count(1) == 1);
  CHECK(cusp_count(11) == 2);
  CHECK(cusp_count(14) == 4);
  CHECK(cusp_count(15) == 4);
  CHECK(cusp_count(17) == 2);
  CHECK(nu2_count(1) == 1);
  CHECK(nu3_count(1) == 1);
  CHECK(nu2_count(13) == 2);
  CHECK(nu3_count(13) == 2);
}

TEST_CASE("P1 action is a permutation reaching every point") {
  for (std::int64_t n : {1, 2, 6, 11, 14}) {
    P1Table table(n);
    std::vector<bool> hit_s(table.size(), false), hit_t(table.size(), false);
    for (std::size_t i = 0; i < table.size(); ++i) {
      hit_s[table.perm_s()[i]] = true;
      hit_t[table.perm_t()[i]] = true;
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      CHECK(hit_s[i]);
      CHECK(hit_t[i]);
    }
    // breadth-first search from (0:1) under S, T reaches all points
    std::vector<bool> seen(table.size(), false);
    std::vector<std::size_t> queue{table.index_of(0, 1)};
    seen[queue[0]] = true;
    while (!queue.empty()) {
      std::size_t r = queue.back();
      queue.pop_back();
      for (std::size_t img : {table.perm_s()[r], table.perm_t()[r]})
        if (!seen[img]) {
          seen[img] = true;
          queue.push_back(img);
        }
    }
    for (std::size_t i = 0; i < table.size(); ++i) CHECK(seen[i]);
  }
}

TEST_CASE("generators of SL2(Z) are the standard pair") {
  auto full = CongruenceSubgroup::sl2z();
  REQUIRE(full.generators().size() == 2);
  CHECK(full.generators()[0] == gen_s());
  CHECK(full.generators()[1] == gen_t());
}

TEST_CASE("Schreier generators land in the group and are bounded") {
  for (std::int64_t n : {2, 11, 14}) {
    auto group = CongruenceSubgroup::gamma0(n);
    const auto& gens = group.generators();
    CHECK(gens.size() <= 2 * static_cast<std::size_t>(mu_index(n)));
    for (const Mat2& g : gens) CHECK(group.contains(g));
  }
}

TEST_CASE("Schreier certificate") {
  // Rebuild the transversal and check every t_r * s * t_{r.s}^{-1} passes
  // the membership predicate.
  auto group = CongruenceSubgroup::gamma0(11);
  const P1Table& p1 = group.p1();
  std::vector<Mat2> transversal(p1.size(), Mat2::identity());
  std::vector<bool> known(p1.size(), false);
  std::size_t root = p1.index_of(0, 1);
  known[root] = true;
  std::vector<std::size_t> queue{root};
  while (!queue.empty()) {
    std::size_t r = queue.back();
    queue.pop_back();
    for (const Mat2& s : {gen_s(), gen_t()}) {
      std::size_t img = p1.apply(r, s);
      if (!known[img]) {
        known[img] = true;
        transversal[img] = transversal[r] * s;
        queue.push_back(img);
      }
    }
  }
  for (std::size_t r = 0; r < p1.size(); ++r) {
    // the transversal element's coset label is the point itself
    auto e = integral_entries(transversal[r]);
    CHECK(p1.index_of(e[2].get_si(), e[3].get_si()) == r);
    for (const Mat2& s : {gen_s(), gen_t()}) {
      std::size_t img = p1.apply(r, s);
      CHECK(group.contains(transversal[r] * s * transversal[img].inverse()));
    }
  }
}

TEST_CASE("random words in the generators stay in the group") {
  auto group = CongruenceSubgroup::gamma0(14);
  WordSampler sampler(group, 2024, 8);
  for (int t = 0; t < 50; ++t) CHECK(group.contains(sampler.next_word()));
}

TEST_CASE("generator computation is unsupported for Gamma1 and Gamma(N)") {
  CHECK_THROWS_AS(CongruenceSubgroup::gamma1(5).generators(), UnsupportedError);
  CHECK_THROWS_AS(CongruenceSubgroup::gamma_full(3).generators(),
                  UnsupportedError);
}

TEST_CASE("canonical P1 representative rule") {
  // smallest pair under unit rescaling, lexicographic order
  CHECK(p1_canonicalize(11, 5, 3) == p1_canonicalize(11, 10, 6));
  ProjectivePoint p = p1_canonicalize(12, 4, 5);
  for (std::int64_t u : {5, 7, 11}) {
    CHECK(p1_canonicalize(12, 4 * u, 5 * u) == p);
  }
  CHECK(p1_canonicalize(11, 0, 7) == ProjectivePoint{0, 1});
  CHECK(p1_canonicalize(11, 3, 0) == ProjectivePoint{1, 0});
  CHECK_THROWS_AS(p1_canonicalize(12, 2, 4), std::invalid_argument);
}
