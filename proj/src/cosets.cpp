#include "hecke/cosets.hpp"

#include <algorithm>
#include <deque>

#include "hecke/errors.hpp"

namespace hecke {

CosetKey coset_key(const CongruenceSubgroup& group, const Mat2& x) {
  if (!x.is_integral())
    throw NonIntegralError("coset key requires an integral matrix");
  CosetKey key;
  key.hnf = hnf_cols(x);
  if (group.kind() == GroupKind::Full || group.level() == 1) {
    key.p1 = {0, 0};
    return key;
  }
  if (group.kind() != GroupKind::Gamma0)
    throw UnsupportedError("coset keys are implemented for SL2(Z) and Gamma0(N)");
  // u := hnf^{-1} x lies in SL2(Z); its first column mod N, up to units,
  // classifies the coset u*Gamma0(N).
  Mat2 u = key.hnf.inverse() * x;
  auto e = integral_entries(u);
  Integer N(static_cast<long>(group.level()));
  Integer uc = e[0] % N, ud = e[2] % N;
  key.p1 = p1_canonicalize(group.level(), uc.get_si(), ud.get_si());
  return key;
}

bool stabilizer_contains(const CongruenceSubgroup& group, const Mat2& a,
                         const Mat2& x) {
  return group.contains(x) && group.contains(a.inverse() * x * a);
}

CosetDecomposition::CosetDecomposition(CongruenceSubgroup group, Mat2 a,
                                       std::vector<Mat2> reps,
                                       std::vector<CosetKey> keys)
    : group_(std::move(group)), a_(std::move(a)), reps_(std::move(reps)),
      keys_(std::move(keys)) {
  Mat2 a_inv = a_.inverse();
  deltas_.reserve(reps_.size());
  for (const Mat2& r : reps_) deltas_.push_back(r * a_inv);
  for (std::size_t i = 0; i < keys_.size(); ++i) key_index_[keys_[i]] = i;
}

std::size_t CosetDecomposition::coset_index(const Mat2& x) const {
  if (x.det() != a_.det()) throw NotInCosetError("determinant mismatch");
  auto it = key_index_.find(coset_key(group_, x));
  if (it == key_index_.end())
    throw NotInCosetError("matrix is not in the double coset: " + to_string(x));
  return it->second;
}

bool CosetDecomposition::contains(const Mat2& x) const {
  if (!x.is_integral() || x.det() != a_.det()) return false;
  return key_index_.count(coset_key(group_, x)) != 0;
}

void CosetDecomposition::verify() const {
  if (reps_.empty() || !deltas_[0].is_identity())
    throw std::logic_error("delta_1 must be the identity");
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (!group_.contains(deltas_[i]))
      throw std::logic_error("delta_i outside the group");
    if (reps_[i] != deltas_[i] * a_)
      throw std::logic_error("a_i != delta_i * a");
    for (std::size_t j = i + 1; j < reps_.size(); ++j)
      if (group_.contains(reps_[i].inverse() * reps_[j]))
        throw std::logic_error("coset representatives are not disjoint");
  }
  // Left Gamma-closure: every generator maps every coset into the list.
  for (const Mat2& g : group_.generators_sym())
    for (const Mat2& r : reps_) {
      Mat2 y = g * r;
      bool found = false;
      for (const Mat2& s : reps_)
        if (group_.contains(s.inverse() * y)) {
          found = true;
          break;
        }
      if (!found) throw std::logic_error("coset list is not closed under Gamma");
    }
}

CosetDecomposition decompose(const CongruenceSubgroup& group, const Mat2& a,
                             long cap) {
  if (!a.is_integral())
    throw NonIntegralError("decompose requires an integral representative");
  if (a.det() <= 0)
    throw std::invalid_argument("decompose requires positive determinant");
  const std::vector<Mat2>& gens = group.generators_sym();

  std::map<CosetKey, Mat2> found;
  CosetKey root = coset_key(group, a);
  found.emplace(root, a);
  std::deque<Mat2> queue{a};
  while (!queue.empty()) {
    Mat2 x = queue.front();
    queue.pop_front();
    for (const Mat2& g : gens) {
      Mat2 y = g * x;
      CosetKey key = coset_key(group, y);
      if (found.emplace(key, y).second) {
        if (static_cast<long>(found.size()) > cap)
          throw CapExceededError("coset enumeration exceeded cap " +
                                 std::to_string(cap));
        queue.push_back(y);
      }
    }
  }

  // Canonical order: a's own coset first (so delta_1 = id), the rest by key.
  std::vector<Mat2> reps{a};
  std::vector<CosetKey> keys{root};
  for (const auto& [key, rep] : found) {
    if (key == root) continue;
    reps.push_back(rep);
    keys.push_back(key);
  }
  return CosetDecomposition(group, a, std::move(reps), std::move(keys));
}

std::vector<Mat2> left_coset_reps(const CongruenceSubgroup& group, const Mat2& a,
                                  long cap) {
  CosetDecomposition dual = decompose(group, a.adjugate(), cap);
  std::vector<Mat2> reps;
  reps.reserve(dual.degree());
  for (const Mat2& r : dual.reps()) reps.push_back(r.adjugate());
  return reps;
}

Cocycle cocycle(const CosetDecomposition& dec, const Mat2& gamma) {
  if (!dec.group().contains(gamma))
    throw NotInGroupError("cocycle argument is not in the group: " + to_string(gamma));
  const std::size_t d = dec.degree();
  Cocycle cc;
  cc.gamma = gamma;
  cc.perm.resize(d);
  cc.values.reserve(d);
  std::vector<bool> hit(d, false);
  for (std::size_t i = 0; i < d; ++i) {
    Mat2 y = gamma * dec.reps()[i];
    std::size_t j = dec.coset_index(y);
    if (hit[j]) throw std::logic_error("cocycle index map is not injective");
    hit[j] = true;
    cc.perm[i] = j;
    cc.values.push_back(dec.reps()[j].inverse() * y);
  }
  return cc;
}

}  // namespace hecke
