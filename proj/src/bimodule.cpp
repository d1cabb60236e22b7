#include "hecke/bimodule.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

CoefficientAlgebra CoefficientAlgebra::trivial() {
  CoefficientAlgebra alg;
  alg.state_ = std::make_shared<State>();
  return alg;
}

CoefficientAlgebra CoefficientAlgebra::finite_set(std::int64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("finite_set modulus must be >= 2");
  CoefficientAlgebra alg;
  alg.state_ = std::make_shared<State>();
  alg.state_->variant = CoefficientVariant::FiniteSet;
  alg.state_->modulus = modulus;
  alg.state_->dim = static_cast<std::size_t>(modulus) + 1;  // P^1(F_m)
  return alg;
}

CoeffValue CoefficientAlgebra::zero() const {
  return CoeffValue{std::vector<GaussRat>(state_->dim)};
}

CoeffValue CoefficientAlgebra::one() const {
  return scalar(GaussRat(Rational(1)));
}

CoeffValue CoefficientAlgebra::scalar(const GaussRat& z) const {
  return CoeffValue{std::vector<GaussRat>(state_->dim, z)};
}

CoeffValue CoefficientAlgebra::delta(std::size_t index, const GaussRat& z) const {
  CoeffValue v = zero();
  v.comp.at(index) = z;
  return v;
}

bool CoefficientAlgebra::is_zero(const CoeffValue& v) const {
  return std::all_of(v.comp.begin(), v.comp.end(),
                     [](const GaussRat& z) { return z.is_zero(); });
}

CoeffValue CoefficientAlgebra::add(const CoeffValue& x, const CoeffValue& y) const {
  CoeffValue out = x;
  for (std::size_t k = 0; k < out.comp.size(); ++k)
    out.comp[k] = out.comp[k] + y.comp[k];
  return out;
}

CoeffValue CoefficientAlgebra::sub(const CoeffValue& x, const CoeffValue& y) const {
  CoeffValue out = x;
  for (std::size_t k = 0; k < out.comp.size(); ++k)
    out.comp[k] = out.comp[k] - y.comp[k];
  return out;
}

CoeffValue CoefficientAlgebra::neg(const CoeffValue& x) const {
  CoeffValue out = x;
  for (auto& z : out.comp) z = -z;
  return out;
}

CoeffValue CoefficientAlgebra::mul(const CoeffValue& x, const CoeffValue& y) const {
  CoeffValue out = x;
  for (std::size_t k = 0; k < out.comp.size(); ++k)
    out.comp[k] = out.comp[k] * y.comp[k];
  return out;
}

CoeffValue CoefficientAlgebra::conj(const CoeffValue& x) const {
  CoeffValue out = x;
  for (auto& z : out.comp) z = z.conj();
  return out;
}

namespace {

// p/q mod m with q invertible; throws DomainMismatchError otherwise.
std::int64_t reduce_mod(const Rational& r, std::int64_t m) {
  Integer M(static_cast<long>(m));
  Integer num;
  mpz_fdiv_r(num.get_mpz_t(), r.get_num().get_mpz_t(), M.get_mpz_t());
  Integer den;
  mpz_fdiv_r(den.get_mpz_t(), r.get_den().get_mpz_t(), M.get_mpz_t());
  Integer den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t()) == 0)
    throw DomainMismatchError("matrix entry is not reducible mod " +
                              std::to_string(m));
  Integer out = (num * den_inv) % M;
  if (out < 0) out += M;
  return out.get_si();
}

}  // namespace

const std::vector<std::size_t>& CoefficientAlgebra::permutation_of(
    const Mat2& x) const {
  auto it = state_->table.find(x);
  if (it != state_->table.end()) return it->second;
  const std::int64_t m = state_->modulus;
  std::int64_t a = reduce_mod(x.a, m), b = reduce_mod(x.b, m);
  std::int64_t c = reduce_mod(x.c, m), d = reduce_mod(x.d, m);
  if ((a * d - b * c) % m == 0)
    throw DomainMismatchError("matrix determinant vanishes mod " +
                              std::to_string(m));
  // Points of P^1(F_m): index t in [0, m) is (t : 1), index m is (1 : 0).
  // The action is by the reduced matrix on column vectors.
  std::vector<std::size_t> perm(state_->dim);
  for (std::size_t idx = 0; idx < state_->dim; ++idx) {
    std::int64_t u = (idx < static_cast<std::size_t>(m)) ? static_cast<std::int64_t>(idx) : 1;
    std::int64_t w = (idx < static_cast<std::size_t>(m)) ? 1 : 0;
    std::int64_t nu = (a * u + b * w) % m;
    std::int64_t nw = (c * u + d * w) % m;
    if (nu < 0) nu += m;
    if (nw < 0) nw += m;
    if (nw != 0) {
      Integer inv;
      Integer W(static_cast<long>(nw)), M(static_cast<long>(m));
      mpz_invert(inv.get_mpz_t(), W.get_mpz_t(), M.get_mpz_t());
      perm[idx] = static_cast<std::size_t>(((nu * inv.get_si()) % m + m) % m);
    } else {
      perm[idx] = static_cast<std::size_t>(m);
    }
  }
  auto [pos, ok] = state_->table.emplace(x, std::move(perm));
  (void)ok;
  return pos->second;
}

CoeffValue CoefficientAlgebra::act(const Mat2& x, const CoeffValue& v) const {
  if (state_->variant == CoefficientVariant::Trivial) return v;
  const std::vector<std::size_t>& perm = permutation_of(x);
  CoeffValue out = zero();
  for (std::size_t q = 0; q < v.comp.size(); ++q) out.comp[perm[q]] = v.comp[q];
  return out;
}

bool CoefficientAlgebra::composition_holds(const Mat2& x, const Mat2& y) const {
  if (state_->variant == CoefficientVariant::Trivial) return true;
  const auto px = permutation_of(x);
  const auto py = permutation_of(y);
  const auto pxy = permutation_of(x * y);
  for (std::size_t q = 0; q < pxy.size(); ++q)
    if (pxy[q] != px[py[q]]) return false;
  return true;
}

CoeffValue CoefficientAlgebra::random_value(WordSampler& sampler) const {
  CoeffValue out = zero();
  for (auto& z : out.comp) z = sampler.next_gauss();
  return out;
}

FinSuppFunction FinSuppFunction::on_group(CongruenceSubgroup group,
                                          CoefficientAlgebra alg) {
  FinSuppFunction f;
  f.tag_ = DomainTag::Group;
  f.group_ = std::move(group);
  f.alg_ = std::move(alg);
  return f;
}

FinSuppFunction FinSuppFunction::on_coset(CosetDecompositionPtr dec,
                                          CoefficientAlgebra alg) {
  FinSuppFunction f;
  f.tag_ = DomainTag::Coset;
  f.group_ = dec->group();
  f.dec_ = std::move(dec);
  f.alg_ = std::move(alg);
  return f;
}

void FinSuppFunction::add_point(const Mat2& x, const CoeffValue& value) {
  if (tag_ == DomainTag::Group) {
    if (!group_.contains(x))
      throw DomainMismatchError("support point is not in the group");
  } else if (!dec_->contains(x)) {
    throw DomainMismatchError("support point is not in the double coset");
  }
  auto it = support_.find(x);
  if (it == support_.end()) {
    if (!alg_.is_zero(value)) support_.emplace(x, value);
    return;
  }
  it->second = alg_.add(it->second, value);
  if (alg_.is_zero(it->second)) support_.erase(it);
}

CoeffValue FinSuppFunction::value_at(const Mat2& x) const {
  auto it = support_.find(x);
  return it == support_.end() ? alg_.zero() : it->second;
}

bool operator==(const FinSuppFunction& x, const FinSuppFunction& y) {
  return x.tag_ == y.tag_ && x.support_ == y.support_;
}

namespace {

void require_group_domain(const FinSuppFunction& f, const char* who) {
  if (f.tag() != DomainTag::Group)
    throw DomainMismatchError(std::string(who) + ": expected a function on Gamma");
}

void require_compatible(const FinSuppFunction& x, const FinSuppFunction& y,
                        const char* who) {
  if (!x.algebra().compatible(y.algebra()) || !(x.group() == y.group()))
    throw DomainMismatchError(std::string(who) + ": incompatible operands");
}

FinSuppFunction like(const FinSuppFunction& model) {
  if (model.tag() == DomainTag::Group)
    return FinSuppFunction::on_group(model.group(), model.algebra());
  return FinSuppFunction::on_coset(model.dec(), model.algebra());
}

}  // namespace

FinSuppFunction convolve_left(const FinSuppFunction& f,
                              const FinSuppFunction& psi) {
  require_group_domain(f, "convolve_left");
  require_compatible(f, psi, "convolve_left");
  const CoefficientAlgebra& alg = psi.algebra();
  FinSuppFunction out = like(psi);
  for (const auto& [gamma, fv] : f.support())
    for (const auto& [eta, pv] : psi.support())
      out.add_point(gamma * eta, alg.mul(fv, alg.act(gamma, pv)));
  return out;
}

FinSuppFunction convolve_right(const FinSuppFunction& psi,
                               const FinSuppFunction& f) {
  require_group_domain(f, "convolve_right");
  require_compatible(f, psi, "convolve_right");
  const CoefficientAlgebra& alg = psi.algebra();
  FinSuppFunction out = like(psi);
  for (const auto& [eta, pv] : psi.support())
    for (const auto& [delta, fv] : f.support())
      out.add_point(eta * delta, alg.mul(pv, alg.act(eta, fv)));
  return out;
}

FinSuppFunction group_involution(const FinSuppFunction& f) {
  require_group_domain(f, "group_involution");
  const CoefficientAlgebra& alg = f.algebra();
  FinSuppFunction out = like(f);
  for (const auto& [gamma, v] : f.support()) {
    Mat2 gi = gamma.inverse();
    out.add_point(gi, alg.act(gi, alg.conj(v)));
  }
  return out;
}

FinSuppFunction inner_product(const FinSuppFunction& phi,
                              const FinSuppFunction& psi) {
  if (phi.tag() != DomainTag::Coset || psi.tag() != DomainTag::Coset)
    throw DomainMismatchError("inner_product expects coset functions");
  require_compatible(phi, psi, "inner_product");
  if (phi.dec()->a() != psi.dec()->a())
    throw DomainMismatchError("inner_product: different double cosets");
  const CoefficientAlgebra& alg = phi.algebra();
  FinSuppFunction out = FinSuppFunction::on_group(phi.group(), alg);
  for (const auto& [xi, pv] : phi.support())
    for (const auto& [eta, qv] : psi.support()) {
      Mat2 delta = xi.inverse() * eta;  // valid iff both are in one coset
      if (!phi.group().contains(delta)) continue;
      out.add_point(delta, alg.act(xi.inverse(), alg.mul(alg.conj(pv), qv)));
    }
  return out;
}

FreeModuleVector free_zero(const CosetDecompositionPtr& dec,
                           const CoefficientAlgebra& alg) {
  FreeModuleVector v;
  v.dec = dec;
  for (std::size_t i = 0; i < dec->degree(); ++i)
    v.comp.push_back(FinSuppFunction::on_group(dec->group(), alg));
  return v;
}

FreeModuleVector alpha_coset(const FinSuppFunction& psi) {
  if (psi.tag() != DomainTag::Coset)
    throw DomainMismatchError("alpha_coset expects a coset function");
  const CosetDecompositionPtr& dec = psi.dec();
  const CoefficientAlgebra& alg = psi.algebra();
  FreeModuleVector out = free_zero(dec, alg);
  for (const auto& [eta, v] : psi.support()) {
    std::size_t i = dec->coset_index(eta);
    Mat2 gi_inv = dec->reps()[i].inverse();
    out.comp[i].add_point(gi_inv * eta, alg.act(gi_inv, v));
  }
  return out;
}

FinSuppFunction free_inner_product(const FreeModuleVector& phi,
                                   const FreeModuleVector& psi) {
  if (phi.comp.size() != psi.comp.size())
    throw DomainMismatchError("free_inner_product: rank mismatch");
  FinSuppFunction out = FinSuppFunction::on_group(phi.dec->group(),
                                                  phi.comp.at(0).algebra());
  for (std::size_t i = 0; i < phi.comp.size(); ++i) {
    FinSuppFunction term =
        convolve_left(group_involution(phi.comp[i]), psi.comp[i]);
    for (const auto& [gamma, v] : term.support()) out.add_point(gamma, v);
  }
  return out;
}

FreeModuleVector free_act_function(const FinSuppFunction& f,
                                   const FreeModuleVector& psi) {
  require_group_domain(f, "free_act_function");
  const CosetDecomposition& dec = *psi.dec;
  const CoefficientAlgebra& alg = psi.comp.at(0).algebra();
  FreeModuleVector out = free_zero(psi.dec, alg);
  for (const auto& [gamma, fv] : f.support()) {
    Cocycle cc = cocycle(dec, gamma.inverse());
    for (std::size_t i = 0; i < dec.degree(); ++i) {
      std::size_t src = cc.perm[i];           // gamma^{-1}(i)
      const Mat2& t = cc.values[i];           // t_i(gamma^{-1})
      Mat2 t_inv = t.inverse();
      CoeffValue coeff = alg.act(dec.reps()[i].inverse(), fv);
      for (const auto& [delta_p, v] : psi.comp[src].support())
        out.comp[i].add_point(t_inv * delta_p,
                              alg.mul(coeff, alg.act(t_inv, v)));
    }
  }
  return out;
}

FreeModuleVector free_act_scalar(const CoeffValue& b,
                                 const FreeModuleVector& psi) {
  const CosetDecomposition& dec = *psi.dec;
  const CoefficientAlgebra& alg = psi.comp.at(0).algebra();
  FreeModuleVector out = free_zero(psi.dec, alg);
  for (std::size_t i = 0; i < dec.degree(); ++i) {
    CoeffValue coeff = alg.act(dec.reps()[i].inverse(), b);
    for (const auto& [delta, v] : psi.comp[i].support())
      out.comp[i].add_point(delta, alg.mul(coeff, v));
  }
  return out;
}

FreeModuleVector free_act_unitary(const Mat2& gamma,
                                  const FreeModuleVector& psi) {
  const CosetDecomposition& dec = *psi.dec;
  const CoefficientAlgebra& alg = psi.comp.at(0).algebra();
  if (!dec.group().contains(gamma))
    throw NotInGroupError("free_act_unitary: not a group element");
  FreeModuleVector out = free_zero(psi.dec, alg);
  Cocycle cc = cocycle(dec, gamma.inverse());
  for (std::size_t i = 0; i < dec.degree(); ++i) {
    std::size_t src = cc.perm[i];
    Mat2 t_inv = cc.values[i].inverse();
    for (const auto& [delta_p, v] : psi.comp[src].support())
      out.comp[i].add_point(t_inv * delta_p, alg.act(t_inv, v));
  }
  return out;
}

FreeModuleVector free_act_right(const FreeModuleVector& psi,
                                const FinSuppFunction& f) {
  FreeModuleVector out;
  out.dec = psi.dec;
  for (const FinSuppFunction& c : psi.comp)
    out.comp.push_back(convolve_right(c, f));
  return out;
}

void ProductFunction::add_point(const ProductElement& x, const CoeffValue& value) {
  auto it = support_.find(x);
  if (it == support_.end()) {
    if (!alg_.is_zero(value)) support_.emplace(x, value);
    return;
  }
  it->second = alg_.add(it->second, value);
  if (alg_.is_zero(it->second)) support_.erase(it);
}

CoeffValue ProductFunction::value_at(const ProductElement& x) const {
  auto it = support_.find(x);
  return it == support_.end() ? alg_.zero() : it->second;
}

ProductFunction alpha_tensor(const FinSuppFunction& phi,
                             const FinSuppFunction& psi) {
  if (phi.tag() != DomainTag::Coset || psi.tag() != DomainTag::Coset)
    throw DomainMismatchError("alpha_tensor expects coset functions");
  require_compatible(phi, psi, "alpha_tensor");
  const CoefficientAlgebra& alg = phi.algebra();
  ProductFunction out(phi.dec(), psi.dec(), alg);
  for (const auto& [eta, pv] : phi.support())
    for (const auto& [zeta, qv] : psi.support()) {
      ProductElement c = canonicalize(*phi.dec(), *psi.dec(), eta, zeta);
      out.add_point(c, alg.mul(pv, alg.act(eta, qv)));
    }
  return out;
}

FinSuppFunction product_inner(const ProductFunction& x,
                              const ProductFunction& y) {
  const CoefficientAlgebra& alg = x.algebra();
  FinSuppFunction out =
      FinSuppFunction::on_group(x.left()->group(), alg);
  for (const auto& [c1, v1] : x.support())
    for (const auto& [c2, v2] : y.support()) {
      if (c1.i != c2.i || c1.j != c2.j) continue;
      Mat2 anchor = product_anchor(*x.left(), *x.right(), c1);
      Mat2 delta = c1.delta.inverse() * c2.delta;
      out.add_point(delta,
                    alg.act(anchor.inverse(), alg.mul(alg.conj(v1), v2)));
    }
  return out;
}

ProductFunction product_act_left(const FinSuppFunction& f,
                                 const ProductFunction& x) {
  require_group_domain(f, "product_act_left");
  const CoefficientAlgebra& alg = x.algebra();
  ProductFunction out(x.left(), x.right(), alg);
  for (const auto& [gamma, fv] : f.support())
    for (const auto& [c, v] : x.support()) {
      ProductElement moved = act_left(*x.left(), *x.right(), gamma, c);
      out.add_point(moved, alg.mul(fv, alg.act(gamma, v)));
    }
  return out;
}

ProductFunction product_act_right(const ProductFunction& x,
                                  const FinSuppFunction& f) {
  require_group_domain(f, "product_act_right");
  const CoefficientAlgebra& alg = x.algebra();
  ProductFunction out(x.left(), x.right(), alg);
  for (const auto& [c, v] : x.support()) {
    Mat2 anchor = product_anchor(*x.left(), *x.right(), c);
    for (const auto& [delta, fv] : f.support()) {
      ProductElement moved = act_right(*x.left(), *x.right(), c, delta);
      out.add_point(moved, alg.mul(v, alg.act(anchor, fv)));
    }
  }
  return out;
}

FinSuppFunction tensor_inner(const FinSuppFunction& phi,
                             const FinSuppFunction& psi,
                             const FinSuppFunction& phi2,
                             const FinSuppFunction& psi2) {
  return inner_product(psi, convolve_left(inner_product(phi, phi2), psi2));
}

CheckReport covariant_rep_check(const CoefficientAlgebra& alg,
                                const CosetDecompositionPtr& dec,
                                std::uint64_t seed, std::size_t trials) {
  CheckReport report;
  report.name = "covariant-representation";
  WordSampler sampler(dec->group(), seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Mat2 g1 = sampler.next_word(), g2 = sampler.next_word();
    FreeModuleVector vec = free_zero(dec, alg);
    for (std::size_t i = 0; i < dec->degree(); ++i)
      for (int pts = 0; pts < 2; ++pts)
        vec.comp[i].add_point(sampler.next_word(), alg.random_value(sampler));

    // identity acts as the identity operator
    if (trial == 0)
      report.require(free_act_unitary(Mat2::identity(), vec) == vec,
                     "u_identity is not the identity");

    // multiplicativity u_{g1} u_{g2} = u_{g1 g2}
    FreeModuleVector lhs = free_act_unitary(g1, free_act_unitary(g2, vec));
    FreeModuleVector rhs = free_act_unitary(g1 * g2, vec);
    report.require(lhs == rhs, "u_gamma multiplicativity fails at trial " +
                                   std::to_string(trial));

    // t(b) t(u_gamma) = t(b . u_gamma): the point mass f = delta_gamma x b
    CoeffValue b = alg.random_value(sampler);
    FinSuppFunction f = FinSuppFunction::on_group(dec->group(), alg);
    f.add_point(g1, b);
    FreeModuleVector via_pair = free_act_scalar(b, free_act_unitary(g1, vec));
    FreeModuleVector via_full = free_act_function(f, vec);
    report.require(via_pair == via_full,
                   "covariant pair does not reassemble the full action at trial " +
                       std::to_string(trial));
  }
  return report;
}

namespace {

// Where omega sends the coset-granularity data of one witness orbit:
// labels (i, j) = gamma^k_n(i(k,l), j(k,l)) and the canonical-form delta of
// omega(gamma^k_n z_(k,l)).
struct OmegaCell {
  std::size_t k, l, n;
  ProductElement image;  // canonical form of omega at delta = id
};

}  // namespace

CheckReport heckemod_check(const CongruenceSubgroup& group, const Mat2& a,
                           const Mat2& b, const CoefficientAlgebra& alg,
                           std::uint64_t seed) {
  CheckReport report;
  report.name = "heckemod";
  DoubleCoset A(group, a), B(group, b);
  auto [prod, witness] = shimura_product(A, B);
  witness.verify();
  report.require(witness_bijection_holds(witness),
                 "witness label map is not a bijection");

  // Index the omega images by their (i, j) labels.
  std::map<std::pair<std::size_t, std::size_t>, OmegaCell> cells;
  for (std::size_t k = 0; k < witness.orbits.size(); ++k) {
    const WitnessOrbit& orbit = witness.orbits[k];
    for (std::size_t l = 0; l < orbit.pairs.size(); ++l)
      for (std::size_t n = 0; n < orbit.transversal.size(); ++n) {
        ProductElement image =
            omega(witness, k, l, orbit.transversal[n], Mat2::identity());
        auto labels = std::make_pair(image.i, image.j);
        if (cells.count(labels)) {
          report.require(false, "omega images collide at coset granularity");
          continue;
        }
        cells.emplace(labels, OmegaCell{k, l, n, image});
      }
  }
  report.require(cells.size() == witness.left->degree() * witness.right->degree(),
                 "omega images do not exhaust I x J");

  // The relabeling U^{-1}: product functions -> direct sum over (k, l) of
  // functions on Gamma z_k Gamma. For a canonical form (i, j, delta_c), the
  // preimage point is gamma^k_n * z_(k,l) * (delta_omega^{-1} delta_c).
  auto relabel = [&](const ProductFunction& pf) {
    std::map<std::pair<std::size_t, std::size_t>, FinSuppFunction> comps;
    for (std::size_t k = 0; k < witness.orbits.size(); ++k)
      for (std::size_t l = 0; l < witness.orbits[k].pairs.size(); ++l)
        comps.emplace(std::make_pair(k, l),
                      FinSuppFunction::on_coset(witness.orbits[k].z_dec, alg));
    for (const auto& [c, v] : pf.support()) {
      const OmegaCell& cell = cells.at({c.i, c.j});
      const WitnessOrbit& orbit = witness.orbits[cell.k];
      auto [i0, j0] = orbit.pairs[cell.l];
      Mat2 z_kl = witness.left->reps()[i0] * witness.right->reps()[j0];
      Mat2 point = orbit.transversal[cell.n] * z_kl *
                   (cell.image.delta.inverse() * c.delta);
      comps.at({cell.k, cell.l}).add_point(point, v);
    }
    return comps;
  };

  // Spanning single-point elements on the tensor side.
  WordSampler sampler(group, seed);
  struct Span {
    FinSuppFunction phi, psi;
    ProductFunction image;
    std::map<std::pair<std::size_t, std::size_t>, FinSuppFunction> parts;
  };
  std::vector<Span> spans;
  for (std::size_t i = 0; i < witness.left->degree(); ++i)
    for (std::size_t j = 0; j < witness.right->degree(); ++j) {
      FinSuppFunction phi = FinSuppFunction::on_coset(A.decomposition_ptr(), alg);
      FinSuppFunction psi = FinSuppFunction::on_coset(B.decomposition_ptr(), alg);
      Mat2 tweak = sampler.next_word();
      phi.add_point(witness.left->reps()[i] * tweak, alg.random_value(sampler));
      psi.add_point(tweak.inverse() * witness.right->reps()[j],
                    alg.random_value(sampler));
      ProductFunction image = alpha_tensor(phi, psi);
      auto parts = relabel(image);
      spans.push_back(Span{std::move(phi), std::move(psi), std::move(image),
                           std::move(parts)});
    }

  // Inner products agree: tensor side vs direct sum of coset inner products.
  for (std::size_t s = 0; s < spans.size(); ++s)
    for (std::size_t t = 0; t < spans.size(); ++t) {
      FinSuppFunction lhs =
          tensor_inner(spans[s].phi, spans[s].psi, spans[t].phi, spans[t].psi);
      FinSuppFunction sum = FinSuppFunction::on_group(group, alg);
      for (const auto& [kl, part_s] : spans[s].parts) {
        FinSuppFunction term = inner_product(part_s, spans[t].parts.at(kl));
        for (const auto& [gamma, v] : term.support()) sum.add_point(gamma, v);
      }
      if (!(lhs == sum)) {
        report.require(false,
                       "inner products disagree after relabeling (pair " +
                           std::to_string(s) + "," + std::to_string(t) + ")");
        break;
      }
      report.require(true, "");
    }

  // Module actions through the relabeled isomorphism. The right action and
  // the inner product are strictly componentwise. The left action is
  // componentwise exactly on classes with multiplicity one; on a class with
  // m_k > 1 the stabilizer of the distinguished coset can permute the m_k
  // index pairs, so the transported action shuffles the copies. There the
  // identity to check is the one obtained after summing the copies of the
  // class, which pins the action down on the underlying z_k module.
  FinSuppFunction f = FinSuppFunction::on_group(group, alg);
  f.add_point(sampler.next_word(), alg.random_value(sampler));
  f.add_point(sampler.next_word(), alg.random_value(sampler));
  auto collapse = [&](const std::map<std::pair<std::size_t, std::size_t>,
                                     FinSuppFunction>& parts,
                      std::size_t k) {
    FinSuppFunction total =
        FinSuppFunction::on_coset(witness.orbits[k].z_dec, alg);
    for (const auto& [kl, part] : parts) {
      if (kl.first != k) continue;
      for (const auto& [x, v] : part.support()) total.add_point(x, v);
    }
    return total;
  };
  for (const Span& span : spans) {
    auto left_product = relabel(product_act_left(f, span.image));
    bool ok = true;
    for (std::size_t k = 0; k < witness.orbits.size(); ++k) {
      if (witness.orbits[k].m == 1) {
        auto kl = std::make_pair(k, std::size_t{0});
        ok = ok && (left_product.at(kl) ==
                    convolve_left(f, span.parts.at(kl)));
      }
      ok = ok && (collapse(left_product, k) ==
                  convolve_left(f, collapse(span.parts, k)));
    }
    report.require(ok, "left module action does not commute with relabeling");

    auto right_product = relabel(product_act_right(span.image, f));
    ok = true;
    for (const auto& [kl, part] : span.parts)
      ok = ok && (right_product.at(kl) == convolve_right(part, f));
    report.require(ok, "right module action does not commute with relabeling");
  }

  // Shape of the decomposition: one summand per (k, l), i.e. m_k copies of
  // the Gamma z_k Gamma module, and coset granularity exhausts I x J.
  std::size_t copies = 0, fine_cosets = 0;
  for (const WitnessOrbit& orbit : witness.orbits) {
    copies += orbit.m;
    fine_cosets += orbit.m * orbit.d;
  }
  report.require(copies == spans.front().parts.size(),
                 "summand count differs from sum of multiplicities");
  report.require(fine_cosets == cells.size(),
                 "coset-granularity cell count mismatch");
  return report;
}

FinSuppFunction random_group_function(const CongruenceSubgroup& group,
                                      const CoefficientAlgebra& alg,
                                      WordSampler& sampler,
                                      std::size_t max_support) {
  FinSuppFunction f = FinSuppFunction::on_group(group, alg);
  std::size_t n = static_cast<std::size_t>(sampler.next_int(1, max_support));
  for (std::size_t k = 0; k < n; ++k)
    f.add_point(sampler.next_word(), alg.random_value(sampler));
  return f;
}

FinSuppFunction random_coset_function(const CosetDecompositionPtr& dec,
                                      const CoefficientAlgebra& alg,
                                      WordSampler& sampler,
                                      std::size_t max_support) {
  FinSuppFunction f = FinSuppFunction::on_coset(dec, alg);
  std::size_t n = static_cast<std::size_t>(sampler.next_int(1, max_support));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i =
        static_cast<std::size_t>(sampler.next_int(0, dec->degree() - 1));
    f.add_point(dec->reps()[i] * sampler.next_word(), alg.random_value(sampler));
  }
  return f;
}

}  // namespace hecke
