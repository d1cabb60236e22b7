#include "hecke/hecke_ring.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

std::string DoubleCosetLabel::to_string() const {
  if (has_smith)
    return "smith(" + d1.get_str() + "," + d2.get_str() + ")";
  return "coset(" + hecke::to_string(min_key.hnf) + "|" +
         std::to_string(min_key.p1.c) + ":" + std::to_string(min_key.p1.d) + ")";
}

namespace {

DoubleCosetLabel label_of(const CosetDecomposition& dec) {
  DoubleCosetLabel label;
  label.min_key = *std::min_element(dec.keys().begin(), dec.keys().end());
  if (dec.group().kind() == GroupKind::Full) {
    SmithForm sf = smith_form(dec.a());
    label.has_smith = true;
    label.d1 = sf.d1;
    label.d2 = sf.d2;
  }
  return label;
}

}  // namespace

DoubleCoset::DoubleCoset(const CongruenceSubgroup& group, const Mat2& a, long cap)
    : dec_(std::make_shared<CosetDecomposition>(decompose(group, a, cap))),
      label_(label_of(*dec_)) {}

bool double_coset_eq(const CongruenceSubgroup& group, const Mat2& a,
                     const Mat2& b, long cap) {
  if (!a.is_integral() || !b.is_integral())
    throw NonIntegralError("double_coset_eq requires integral matrices");
  bool eq = false;
  if (a.det() == b.det()) {
    CosetDecomposition dec = decompose(group, a, cap);
    eq = dec.contains(b);
  }
  if (group.kind() == GroupKind::Full) {
    SmithForm sa = smith_form(a), sb = smith_form(b);
    bool smith_eq = (sa.d1 == sb.d1 && sa.d2 == sb.d2);
    if (smith_eq != eq)
      throw std::logic_error("Smith fast path disagrees with coset membership");
  }
  return eq;
}

std::size_t ProductWitness::pair_count() const {
  std::size_t total = 0;
  for (const WitnessOrbit& orbit : orbits) total += orbit.m * orbit.d;
  return total;
}

void ProductWitness::verify() const {
  const std::size_t expected = left->degree() * right->degree();
  if (pair_count() != expected)
    throw std::logic_error("witness identity sum m_k d_k = |I||J| fails");
  // Recount the multiplicity on every right coset of every class.
  for (const WitnessOrbit& orbit : orbits) {
    if (orbit.m != orbit.pairs.size())
      throw std::logic_error("witness pair list size differs from m_k");
    if (orbit.d != orbit.transversal.size() || orbit.d != orbit.z_dec->degree())
      throw std::logic_error("witness transversal size differs from d_k");
    if (!orbit.transversal[0].is_identity())
      throw std::logic_error("gamma^k_1 must be the identity");
    for (std::size_t n = 0; n < orbit.d; ++n) {
      const Mat2 coset_rep = orbit.transversal[n] * orbit.z;
      std::size_t count = 0;
      for (std::size_t i = 0; i < left->degree(); ++i)
        for (std::size_t j = 0; j < right->degree(); ++j) {
          Mat2 prod = left->reps()[i] * right->reps()[j];
          if (coset_key(left->group(), prod) ==
              coset_key(left->group(), coset_rep))
            ++count;
        }
      if (count != orbit.m)
        throw std::logic_error("multiplicity is not constant across the class");
    }
  }
}

void HeckeElement::add_term(const DoubleCoset& coset, std::int64_t coeff) {
  if (!(coset.group() == group_))
    throw GroupMismatchError("term group differs from element group");
  if (coeff == 0) return;
  auto it = terms_.find(coset.label());
  if (it == terms_.end()) {
    terms_.emplace(coset.label(), std::make_pair(coset, coeff));
    return;
  }
  it->second.second += coeff;
  if (it->second.second == 0) terms_.erase(it);
}

std::int64_t HeckeElement::coeff(const DoubleCosetLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? 0 : it->second.second;
}

HeckeElement operator+(const HeckeElement& x, const HeckeElement& y) {
  if (!(x.group_ == y.group_)) throw GroupMismatchError("group mismatch in +");
  HeckeElement out = x;
  for (const auto& [label, term] : y.terms_)
    out.add_term(term.first, term.second);
  return out;
}

HeckeElement operator-(const HeckeElement& x, const HeckeElement& y) {
  if (!(x.group_ == y.group_)) throw GroupMismatchError("group mismatch in -");
  HeckeElement out = x;
  for (const auto& [label, term] : y.terms_)
    out.add_term(term.first, -term.second);
  return out;
}

HeckeElement operator*(std::int64_t n, const HeckeElement& x) {
  HeckeElement out(x.group_);
  if (n == 0) return out;
  for (const auto& [label, term] : x.terms_)
    out.add_term(term.first, n * term.second);
  return out;
}

bool operator==(const HeckeElement& x, const HeckeElement& y) {
  if (!(x.group_ == y.group_)) return false;
  if (x.terms_.size() != y.terms_.size()) return false;
  for (const auto& [label, term] : x.terms_)
    if (y.coeff(label) != term.second) return false;
  return true;
}

std::pair<HeckeElement, ProductWitness> shimura_product(const DoubleCoset& A,
                                                        const DoubleCoset& B) {
  if (!(A.group() == B.group()))
    throw GroupMismatchError("shimura_product requires one group");
  const CongruenceSubgroup& group = A.group();
  const CosetDecomposition& left = A.decomposition();
  const CosetDecomposition& right = B.decomposition();

  // Bucket the |I||J| products into right cosets by canonical key. Sorted
  // map iteration makes every later choice deterministic.
  struct Bucket {
    Mat2 rep;  // g_i h_j for the lexicographically least (i,j) in the bucket
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
  };
  std::map<CosetKey, Bucket> buckets;
  for (std::size_t i = 0; i < left.degree(); ++i)
    for (std::size_t j = 0; j < right.degree(); ++j) {
      Mat2 prod = left.reps()[i] * right.reps()[j];
      CosetKey key = coset_key(group, prod);
      auto [it, fresh] = buckets.try_emplace(key);
      if (fresh) it->second.rep = prod;
      it->second.pairs.emplace_back(i, j);
    }

  // Group the coset buckets into double cosets.
  struct ClassData {
    DoubleCoset coset;
    std::vector<CosetKey> bucket_keys;  // sorted; first entry is z_k's coset
  };
  std::vector<ClassData> classes;
  std::map<CosetKey, std::size_t> class_of;
  for (const auto& [key, bucket] : buckets) {
    if (class_of.count(key)) continue;
    DoubleCoset dc(group, bucket.rep);
    ClassData data{dc, {}};
    for (const auto& [key2, bucket2] : buckets) {
      if (class_of.count(key2)) continue;
      if (dc.decomposition().contains(bucket2.rep)) {
        class_of[key2] = classes.size();
        data.bucket_keys.push_back(key2);
      }
    }
    classes.push_back(std::move(data));
  }

  HeckeElement result(group);
  ProductWitness witness;
  witness.left = A.decomposition_ptr();
  witness.right = B.decomposition_ptr();

  for (ClassData& cls : classes) {
    WitnessOrbit orbit;
    // z_k: the canonically least right coset of the class; its stored rep is
    // the product with the least index pair, so z_k Gamma = g_i h_j Gamma
    // holds with z_k itself of the form g_i h_j.
    const Bucket& zbucket = buckets.at(cls.bucket_keys.front());
    orbit.z = zbucket.rep;
    orbit.pairs = zbucket.pairs;
    orbit.m = orbit.pairs.size();
    orbit.z_dec = std::make_shared<CosetDecomposition>(decompose(group, orbit.z));
    orbit.d = cls.bucket_keys.size();
    if (orbit.d != orbit.z_dec->degree())
      throw std::logic_error("product cosets do not cover the class");
    // gamma^k_n: the delta of z's own decomposition matching bucket n, so
    // that gamma^k_n * z_k Gamma enumerates the class with gamma^k_1 = id.
    orbit.transversal.reserve(orbit.d);
    for (const CosetKey& key : cls.bucket_keys) {
      std::size_t idx = orbit.z_dec->coset_index(buckets.at(key).rep);
      orbit.transversal.push_back(orbit.z_dec->deltas()[idx]);
    }
    if (!orbit.transversal[0].is_identity())
      throw std::logic_error("distinguished coset must carry the identity");

    DoubleCoset zc(group, orbit.z);
    result.add_term(zc, static_cast<std::int64_t>(orbit.m));
    witness.orbits.push_back(std::move(orbit));
  }

  if (witness.pair_count() != left.degree() * right.degree())
    throw std::logic_error("witness identity sum m_k d_k = |I||J| fails");
  return {std::move(result), std::move(witness)};
}

HeckeElement hecke_mul(const HeckeElement& x, const HeckeElement& y) {
  if (!(x.group() == y.group()))
    throw GroupMismatchError("hecke_mul requires one group");
  HeckeElement out(x.group());
  for (const auto& [lx, tx] : x.terms())
    for (const auto& [ly, ty] : y.terms()) {
      auto [prod, witness] = shimura_product(tx.first, ty.first);
      out = out + (tx.second * ty.second) * prod;
    }
  return out;
}

std::int64_t degree(const HeckeElement& x) {
  std::int64_t total = 0;
  for (const auto& [label, term] : x.terms())
    total += term.second * static_cast<std::int64_t>(term.first.degree());
  return total;
}

HeckeElement hecke_unit(const CongruenceSubgroup& group) {
  HeckeElement out(group);
  out.add_term(DoubleCoset(group, Mat2::identity()), 1);
  return out;
}

HeckeElement hecke_coset_tn(const CongruenceSubgroup& group, std::int64_t n) {
  HeckeElement out(group);
  out.add_term(DoubleCoset(group, Mat2::diag(1, static_cast<long>(n))), 1);
  return out;
}

HeckeElement hecke_coset_tpp(const CongruenceSubgroup& group, std::int64_t p) {
  HeckeElement out(group);
  out.add_term(
      DoubleCoset(group, Mat2::diag(static_cast<long>(p), static_cast<long>(p))),
      1);
  return out;
}

HeckeElement hecke_operator_tn(const CongruenceSubgroup& group, std::int64_t n) {
  HeckeElement out(group);
  for (std::int64_t d1 = 1; d1 * d1 <= n; ++d1) {
    if (n % d1 != 0) continue;
    std::int64_t d2 = n / d1;
    if (d2 % d1 != 0) continue;
    out.add_term(DoubleCoset(group, Mat2::diag(static_cast<long>(d1),
                                               static_cast<long>(d2))),
                 1);
  }
  return out;
}

}  // namespace hecke
