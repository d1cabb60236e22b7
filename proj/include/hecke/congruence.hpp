#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "hecke/mat2.hpp"

namespace hecke {

enum class GroupKind { Full, Gamma0, Gamma1, GammaFull };

// A point (c : d) of P^1(Z/N), stored as the canonical representative:
// the lexicographically smallest pair among all unit rescalings
// (u*c mod N, u*d mod N), scanning units in increasing residue order.
struct ProjectivePoint {
  std::int64_t c = 0;
  std::int64_t d = 0;

  friend bool operator==(const ProjectivePoint& x, const ProjectivePoint& y) {
    return x.c == y.c && x.d == y.d;
  }
  friend bool operator<(const ProjectivePoint& x, const ProjectivePoint& y) {
    return x.c != y.c ? x.c < y.c : x.d < y.d;
  }
};

ProjectivePoint p1_canonicalize(std::int64_t N, std::int64_t c, std::int64_t d);

// Complete orbit table of P^1(Z/N) with the right action of S and T,
// indexed by the sorted list of canonical points.
class P1Table {
 public:
  explicit P1Table(std::int64_t N);

  std::int64_t level() const { return N_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  std::size_t index_of(const ProjectivePoint& p) const;
  std::size_t index_of(std::int64_t c, std::int64_t d) const {
    return index_of(p1_canonicalize(N_, c, d));
  }
  // Right action (c:d) * m = (c*m.a + d*m.c : c*m.b + d*m.d) for integral m.
  std::size_t apply(std::size_t idx, const Mat2& m) const;
  const std::vector<std::size_t>& perm_s() const { return perm_s_; }
  const std::vector<std::size_t>& perm_t() const { return perm_t_; }

 private:
  std::int64_t N_;
  std::vector<ProjectivePoint> points_;
  std::map<ProjectivePoint, std::size_t> index_;
  std::vector<std::size_t> perm_s_, perm_t_;
};

P1Table coset_action(std::int64_t N);

// Index and surface data for Gamma0(N); all exact.
std::int64_t mu_index(std::int64_t N);    // [SL2(Z) : Gamma0(N)]
std::int64_t nu2_count(std::int64_t N);   // elliptic points of order 2
std::int64_t nu3_count(std::int64_t N);   // elliptic points of order 3
std::int64_t cusp_count(std::int64_t N);  // number of cusps of X0(N)
std::int64_t genus_gamma0(std::int64_t N);

// One of SL2(Z), Gamma0(N), Gamma1(N), Gamma(N). Values are cheap to copy;
// generator and coset data are computed at construction and shared.
// Generator computation is available for SL2(Z) and Gamma0(N) only.
//
// The finite-index combinatorics here never use torsion-freeness; SL2(Z)
// and small-level Gamma0(N) do contain torsion.
class CongruenceSubgroup {
 public:
  static CongruenceSubgroup sl2z();
  static CongruenceSubgroup gamma0(std::int64_t N);
  static CongruenceSubgroup gamma1(std::int64_t N);
  static CongruenceSubgroup gamma_full(std::int64_t N);

  GroupKind kind() const { return kind_; }
  std::int64_t level() const { return level_; }
  std::int64_t index() const;  // index in SL2(Z)

  bool contains(const Mat2& x) const;

  // Schreier generators from the P^1 coset action (or {S, T} for SL2(Z)).
  // Throws UnsupportedError for Gamma1 / Gamma(N).
  const std::vector<Mat2>& generators() const;
  // generators() together with their inverses; what orbit searches iterate.
  const std::vector<Mat2>& generators_sym() const;

  const P1Table& p1() const;

  std::string name() const;

  friend bool operator==(const CongruenceSubgroup& x, const CongruenceSubgroup& y) {
    return x.kind_ == y.kind_ && x.level_ == y.level_;
  }
  friend bool operator!=(const CongruenceSubgroup& x, const CongruenceSubgroup& y) {
    return !(x == y);
  }

 private:
  CongruenceSubgroup(GroupKind kind, std::int64_t level);

  struct Data {
    std::shared_ptr<const P1Table> p1;
    std::vector<Mat2> gens;
    std::vector<Mat2> gens_sym;
  };

  GroupKind kind_;
  std::int64_t level_;
  std::shared_ptr<const Data> data_;
};

// The standard generating pair of SL2(Z).
Mat2 gen_s();  // [[0,-1],[1,0]]
Mat2 gen_t();  // [[1,1],[0,1]]

}  // namespace hecke
