#include "hecke/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t N) {
  std::int64_t r = x % N;
  return r < 0 ? r + N : r;
}

std::vector<std::int64_t> prime_factors(std::int64_t N) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= N; ++p) {
    if (N % p == 0) {
      ps.push_back(p);
      while (N % p == 0) N /= p;
    }
  }
  if (N > 1) ps.push_back(N);
  return ps;
}

}  // namespace

ProjectivePoint p1_canonicalize(std::int64_t N, std::int64_t c, std::int64_t d) {
  if (N <= 0) throw std::invalid_argument("level must be positive");
  if (N == 1) return {0, 0};
  c = mod(c, N);
  d = mod(d, N);
  if (std::gcd(std::gcd(c, d), N) != 1)
    throw std::invalid_argument("(c:d) is not primitive mod N");
  ProjectivePoint best{N, N};
  for (std::int64_t u = 1; u < N; ++u) {
    if (std::gcd(u, N) != 1) continue;
    ProjectivePoint cand{mod(u * c, N), mod(u * d, N)};
    if (cand < best) best = cand;
  }
  return best;
}

P1Table::P1Table(std::int64_t N) : N_(N) {
  if (N <= 0) throw std::invalid_argument("level must be positive");
  if (N == 1) {
    points_ = {{0, 0}};
  } else {
    std::map<ProjectivePoint, bool> seen;
    for (std::int64_t c = 0; c < N; ++c)
      for (std::int64_t d = 0; d < N; ++d) {
        if (std::gcd(std::gcd(c, d), N) != 1) continue;
        seen[p1_canonicalize(N, c, d)] = true;
      }
    for (const auto& [p, _] : seen) points_.push_back(p);
  }
  for (std::size_t i = 0; i < points_.size(); ++i) index_[points_[i]] = i;
  perm_s_.resize(points_.size());
  perm_t_.resize(points_.size());
  const Mat2 S = gen_s(), T = gen_t();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    perm_s_[i] = apply(i, S);
    perm_t_[i] = apply(i, T);
  }
}

std::size_t P1Table::index_of(const ProjectivePoint& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("point not in P1 table");
  return it->second;
}

std::size_t P1Table::apply(std::size_t idx, const Mat2& m) const {
  auto e = integral_entries(m);
  const ProjectivePoint& p = points_[idx];
  if (N_ == 1) return 0;
  Integer N(static_cast<long>(N_));
  auto red = [&](const Integer& v) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), N.get_mpz_t());
    return r.get_si();
  };
  std::int64_t a = red(e[0]), b = red(e[1]);
  std::int64_t c = red(e[2]), d = red(e[3]);
  // (c:d) as a row vector, acted on the right.
  std::int64_t nc = mod(p.c * a + p.d * c, N_);
  std::int64_t nd = mod(p.c * b + p.d * d, N_);
  return index_of(p1_canonicalize(N_, nc, nd));
}

P1Table coset_action(std::int64_t N) { return P1Table(N); }

std::int64_t mu_index(std::int64_t N) {
  std::int64_t mu = N;
  for (std::int64_t p : prime_factors(N)) mu += mu / p;
  return mu;
}

std::int64_t nu2_count(std::int64_t N) {
  if (N % 4 == 0) return 0;
  std::int64_t v = 1;
  for (std::int64_t p : prime_factors(N)) {
    if (p == 2) continue;
    v *= (p % 4 == 1) ? 2 : 0;
  }
  return v;
}

std::int64_t nu3_count(std::int64_t N) {
  if (N % 9 == 0) return 0;
  std::int64_t v = 1;
  for (std::int64_t p : prime_factors(N)) {
    if (p == 3) continue;
    v *= (p % 3 == 1) ? 2 : 0;
  }
  return v;
}

std::int64_t cusp_count(std::int64_t N) {
  // sum over d | N of phi(gcd(d, N/d))
  auto phi = [](std::int64_t n) {
    std::int64_t r = n;
    for (std::int64_t p : prime_factors(n)) r -= r / p;
    return r;
  };
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= N; ++d)
    if (N % d == 0) total += phi(std::gcd(d, N / d));
  return total;
}

std::int64_t genus_gamma0(std::int64_t N) {
  // 12*g = 12 + mu - 3*nu2 - 4*nu3 - 6*nu_inf
  std::int64_t twelve_g =
      12 + mu_index(N) - 3 * nu2_count(N) - 4 * nu3_count(N) - 6 * cusp_count(N);
  if (twelve_g % 12 != 0) throw std::logic_error("genus formula not integral");
  return twelve_g / 12;
}

Mat2 gen_s() { return {0, -1, 1, 0}; }
Mat2 gen_t() { return {1, 1, 0, 1}; }

CongruenceSubgroup CongruenceSubgroup::sl2z() {
  return CongruenceSubgroup(GroupKind::Full, 1);
}
CongruenceSubgroup CongruenceSubgroup::gamma0(std::int64_t N) {
  return CongruenceSubgroup(GroupKind::Gamma0, N);
}
CongruenceSubgroup CongruenceSubgroup::gamma1(std::int64_t N) {
  return CongruenceSubgroup(GroupKind::Gamma1, N);
}
CongruenceSubgroup CongruenceSubgroup::gamma_full(std::int64_t N) {
  return CongruenceSubgroup(GroupKind::GammaFull, N);
}

CongruenceSubgroup::CongruenceSubgroup(GroupKind kind, std::int64_t level)
    : kind_(kind), level_(level) {
  if (level <= 0) throw std::invalid_argument("level must be positive");
  if (kind == GroupKind::Full && level != 1)
    throw std::invalid_argument("SL2(Z) has level 1");
  auto data = std::make_shared<Data>();
  if (kind == GroupKind::Full || kind == GroupKind::Gamma0) {
    data->p1 = std::make_shared<P1Table>(level);
    if (kind == GroupKind::Full) {
      data->gens = {gen_s(), gen_t()};
    } else {
      // Schreier generators from a breadth-first transversal of the coset
      // action on P^1(Z/N): for each coset representative t_r and each
      // s in {S, T}, the element t_r * s * t_{r.s}^{-1} lies in Gamma0(N).
      const P1Table& p1 = *data->p1;
      const std::size_t n = p1.size();
      const std::size_t root = p1.index_of(0, 1);
      std::vector<Mat2> transversal(n, Mat2::identity());
      std::vector<bool> known(n, false);
      known[root] = true;
      std::deque<std::size_t> queue{root};
      const std::vector<Mat2> st = {gen_s(), gen_t()};
      while (!queue.empty()) {
        std::size_t r = queue.front();
        queue.pop_front();
        for (const Mat2& s : st) {
          std::size_t img = p1.apply(r, s);
          if (!known[img]) {
            known[img] = true;
            transversal[img] = transversal[r] * s;
            queue.push_back(img);
          }
        }
      }
      if (std::find(known.begin(), known.end(), false) != known.end())
        throw std::logic_error("P1 action is not transitive");
      std::vector<Mat2> gens;
      for (std::size_t r = 0; r < n; ++r) {
        for (const Mat2& s : st) {
          std::size_t img = p1.apply(r, s);
          Mat2 g = transversal[r] * s * transversal[img].inverse();
          if (g.is_identity()) continue;
          if (std::find(gens.begin(), gens.end(), g) == gens.end())
            gens.push_back(g);
        }
      }
      data->gens = std::move(gens);
    }
    for (const Mat2& g : data->gens) {
      data->gens_sym.push_back(g);
      Mat2 gi = g.inverse();
      if (std::find(data->gens_sym.begin(), data->gens_sym.end(), gi) ==
          data->gens_sym.end())
        data->gens_sym.push_back(gi);
    }
  }
  data_ = std::move(data);
}

std::int64_t CongruenceSubgroup::index() const {
  switch (kind_) {
    case GroupKind::Full:
      return 1;
    case GroupKind::Gamma0:
      return mu_index(level_);
    case GroupKind::Gamma1: {
      // [SL2(Z) : Gamma1(N)] = mu(N) * phi(N) = N^2 prod (1 - 1/p^2)
      std::int64_t phi = level_;
      for (std::int64_t p : prime_factors(level_)) phi -= phi / p;
      return mu_index(level_) * phi;
    }
    case GroupKind::GammaFull: {
      if (level_ == 1) return 1;
      if (level_ == 2) return 6;
      std::int64_t idx = level_ * level_ * level_;
      for (std::int64_t p : prime_factors(level_)) idx = idx / (p * p) * (p * p - 1);
      return idx;
    }
  }
  throw std::logic_error("unreachable");
}

bool CongruenceSubgroup::contains(const Mat2& x) const {
  if (!x.is_integral() || x.det() != 1) return false;
  if (kind_ == GroupKind::Full) return true;
  auto e = integral_entries(x);
  Integer N(static_cast<long>(level_));
  auto is0 = [&](const Integer& v) { return v % N == 0; };
  auto is1 = [&](const Integer& v) { return (v - 1) % N == 0; };
  switch (kind_) {
    case GroupKind::Gamma0:
      return is0(e[2]);
    case GroupKind::Gamma1:
      return is0(e[2]) && is1(e[0]) && is1(e[3]);
    case GroupKind::GammaFull:
      return is0(e[1]) && is0(e[2]) && is1(e[0]) && is1(e[3]);
    default:
      return true;
  }
}

const std::vector<Mat2>& CongruenceSubgroup::generators() const {
  if (kind_ != GroupKind::Full && kind_ != GroupKind::Gamma0)
    throw UnsupportedError("generator computation is implemented for SL2(Z) and Gamma0(N) only");
  return data_->gens;
}

const std::vector<Mat2>& CongruenceSubgroup::generators_sym() const {
  if (kind_ != GroupKind::Full && kind_ != GroupKind::Gamma0)
    throw UnsupportedError("generator computation is implemented for SL2(Z) and Gamma0(N) only");
  return data_->gens_sym;
}

const P1Table& CongruenceSubgroup::p1() const {
  if (!data_->p1)
    throw UnsupportedError("coset table available for SL2(Z) and Gamma0(N) only");
  return *data_->p1;
}

std::string CongruenceSubgroup::name() const {
  switch (kind_) {
    case GroupKind::Full:
      return "SL2(Z)";
    case GroupKind::Gamma0:
      return "Gamma0(" + std::to_string(level_) + ")";
    case GroupKind::Gamma1:
      return "Gamma1(" + std::to_string(level_) + ")";
    case GroupKind::GammaFull:
      return "Gamma(" + std::to_string(level_) + ")";
  }
  return "?";
}

}  // namespace hecke
