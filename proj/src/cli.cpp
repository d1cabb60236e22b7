#include "hecke/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "hecke/bimodule.hpp"
#include "hecke/bisets.hpp"
#include "hecke/errors.hpp"
#include "hecke/json_io.hpp"
#include "hecke/modsym.hpp"

namespace hecke {

namespace {

constexpr const char* kEngineVersion = "hecke-engine 1.0.0";

struct GroupChoice {
  bool sl2z = false;
  std::int64_t gamma0 = 0;

  CongruenceSubgroup resolve() const {
    if (sl2z && gamma0 > 0)
      throw CLI::ValidationError("--sl2z and --gamma0 are mutually exclusive");
    if (gamma0 > 0) return CongruenceSubgroup::gamma0(gamma0);
    return CongruenceSubgroup::sl2z();
  }
  std::int64_t level() const { return gamma0 > 0 ? gamma0 : 1; }
};

void add_group_options(CLI::App* cmd, GroupChoice& choice) {
  cmd->add_flag("--sl2z", choice.sl2z, "work over SL2(Z)");
  cmd->add_option("--gamma0", choice.gamma0, "work over Gamma0(N)")
      ->check(CLI::PositiveNumber);
}

Json report_to_json(const std::string& suite,
                    const std::vector<CheckReport>& reports) {
  Json checks = Json::array();
  for (const CheckReport& r : reports) {
    Json failures = Json::array();
    for (const std::string& f : r.failures) failures.push_back(f);
    checks.push_back(Json{{"check", r.name},
                          {"status", r.pass() ? "pass" : "fail"},
                          {"trials", r.trials},
                          {"failures", failures}});
  }
  return Json{{"schema", 1},
              {"engine", kEngineVersion},
              {"suite", suite},
              {"checks", checks}};
}

int emit_report(const std::string& suite, const std::vector<CheckReport>& reports,
                bool json, double elapsed_ms, std::ostream& out) {
  bool all_pass =
      std::all_of(reports.begin(), reports.end(),
                  [](const CheckReport& r) { return r.pass(); });
  if (json) {
    out << report_to_json(suite, reports).dump(2) << "\n";
  } else {
    for (const CheckReport& r : reports) {
      out << (r.pass() ? "PASS" : "FAIL") << "  " << r.name << "  (trials: "
          << r.trials << ")\n";
      for (const std::string& f : r.failures) out << "      " << f << "\n";
    }
    out << (all_pass ? "OK" : "FAILED") << "  suite=" << suite << "  ("
        << elapsed_ms << " ms)\n";
  }
  return all_pass ? kExitPass : kExitCheckFailure;
}

// ---- verification suites ----------------------------------------------

CheckReport suite_cocycle(const CongruenceSubgroup& group, const Mat2& a,
                          std::uint64_t seed, std::size_t trials) {
  CheckReport report;
  report.name = "cocycle(" + group.name() + "," + to_string(a) + ")";
  CosetDecomposition dec = decompose(group, a);
  WordSampler sampler(group, seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Mat2 g1 = sampler.next_word(), g2 = sampler.next_word();
    Cocycle c1 = cocycle(dec, g1), c2 = cocycle(dec, g2);
    Cocycle c12 = cocycle(dec, g1 * g2);
    bool ok = true;
    for (std::size_t i = 0; i < dec.degree(); ++i) {
      // t_i(g1 g2) = t_{g2(i)}(g1) t_i(g2) and the permutations compose
      ok = ok && (c12.perm[i] == c1.perm[c2.perm[i]]);
      ok = ok && (c12.values[i] == c1.values[c2.perm[i]] * c2.values[i]);
    }
    Cocycle cinv = cocycle(dec, g1.inverse());
    for (std::size_t i = 0; i < dec.degree(); ++i) {
      // t_i(g^{-1}) = t_{g^{-1}(i)}(g)^{-1}
      ok = ok && (cinv.values[i] == c1.values[cinv.perm[i]].inverse());
    }
    // the corrections live in the group and conjugate into it
    for (std::size_t i = 0; i < dec.degree(); ++i) {
      ok = ok && group.contains(c1.values[i]);
      ok = ok && group.contains(a * c1.values[i] * a.inverse());
    }
    report.require(ok, "cocycle relation fails at trial " + std::to_string(t));
  }
  return report;
}

CheckReport suite_bieq(const CongruenceSubgroup& group, const Mat2& a,
                       const Mat2& b, std::uint64_t seed, std::size_t trials) {
  CheckReport report;
  report.name = "bieq(" + group.name() + ")";
  DoubleCoset A(group, a), B(group, b);
  auto [prod, witness] = shimura_product(A, B);
  witness.verify();
  report.require(witness_bijection_holds(witness),
                 "(n,k,l) -> gamma^k_n(i,j) is not a bijection onto IxJ");

  WordSampler sampler(group, seed);
  const CosetDecomposition& L = *witness.left;
  const CosetDecomposition& R = *witness.right;
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t k = static_cast<std::size_t>(
        sampler.next_int(0, witness.orbits.size() - 1));
    const WitnessOrbit& orbit = witness.orbits[k];
    std::size_t l =
        static_cast<std::size_t>(sampler.next_int(0, orbit.m - 1));
    Mat2 gamma = sampler.next_word(), delta = sampler.next_word();

    ProductElement image = omega(witness, k, l, gamma, delta);
    auto [i0, j0] = orbit.pairs[l];
    Mat2 z_kl = L.reps()[i0] * R.reps()[j0];
    // anchors are preserved exactly
    report.require(product_anchor(L, R, image) == gamma * z_kl * delta,
                   "omega does not respect anchors at trial " + std::to_string(t));

    // bi-equivariance: translating the input translates the image
    Mat2 g0 = sampler.next_word(), d0 = sampler.next_word();
    ProductElement translated = omega(witness, k, l, g0 * gamma, delta * d0);
    ProductElement moved = act_right(L, R, act_left(L, R, g0, image), d0);
    report.require(translated == moved,
                   "omega is not bi-equivariant at trial " + std::to_string(t));

    // canonical forms depend only on the equivalence class
    Mat2 v = L.reps()[static_cast<std::size_t>(
                sampler.next_int(0, L.degree() - 1))] *
             sampler.next_word();
    Mat2 w = sampler.next_word() *
             R.reps()[static_cast<std::size_t>(
                 sampler.next_int(0, R.degree() - 1))];
    Mat2 shift = sampler.next_word();
    report.require(canonicalize(L, R, v, w) ==
                       canonicalize(L, R, v * shift, shift.inverse() * w),
                   "canonical form depends on the representative at trial " +
                       std::to_string(t));
  }
  return report;
}

CheckReport suite_shimura_witness(const CongruenceSubgroup& group) {
  CheckReport report;
  report.name = "shimura-witness(" + group.name() + ")";
  std::vector<Mat2> gens = {Mat2::diag(1, 2), Mat2::diag(1, 3), Mat2::diag(1, 5),
                            Mat2::diag(2, 2)};
  for (const Mat2& x : gens)
    for (const Mat2& y : gens) {
      DoubleCoset A(group, x), B(group, y);
      auto [prod, witness] = shimura_product(A, B);
      bool ok = true;
      std::string what;
      try {
        witness.verify();
      } catch (const std::exception& e) {
        ok = false;
        what = e.what();
      }
      ok = ok && witness_bijection_holds(witness);
      ok = ok && degree(prod) == static_cast<std::int64_t>(
                                     A.degree() * B.degree());
      report.require(ok, "witness fails for " + to_string(x) + " * " +
                             to_string(y) + " " + what);
    }
  return report;
}

CheckReport suite_unitary_coset(const CongruenceSubgroup& group, const Mat2& a,
                                const CoefficientAlgebra& alg,
                                const std::string& tag, std::uint64_t seed,
                                std::size_t trials) {
  CheckReport report;
  report.name = "unitary-alpha-coset" + tag;
  auto dec = std::make_shared<CosetDecomposition>(decompose(group, a));
  WordSampler sampler(group, seed);
  for (std::size_t t = 0; t < trials; ++t) {
    FinSuppFunction psi = random_coset_function(dec, alg, sampler, 3);
    FinSuppFunction phi = random_coset_function(dec, alg, sampler, 3);
    report.require(free_inner_product(alpha_coset(psi), alpha_coset(phi)) ==
                       inner_product(psi, phi),
                   "alpha_coset breaks the inner product at trial " +
                       std::to_string(t));
    FinSuppFunction f = random_group_function(group, alg, sampler, 2);
    report.require(alpha_coset(convolve_left(f, psi)) ==
                       free_act_function(f, alpha_coset(psi)),
                   "alpha_coset breaks the left action at trial " +
                       std::to_string(t));
    report.require(alpha_coset(convolve_right(psi, f)) ==
                       free_act_right(alpha_coset(psi), f),
                   "alpha_coset breaks the right action at trial " +
                       std::to_string(t));
  }
  return report;
}

CheckReport suite_unitary_tensor(const CongruenceSubgroup& group, const Mat2& a,
                                 const Mat2& b, const CoefficientAlgebra& alg,
                                 const std::string& tag, std::uint64_t seed,
                                 std::size_t trials) {
  CheckReport report;
  report.name = "unitary-alpha-tensor" + tag;
  auto dec_a = std::make_shared<CosetDecomposition>(decompose(group, a));
  auto dec_b = std::make_shared<CosetDecomposition>(decompose(group, b));
  WordSampler sampler(group, seed);
  for (std::size_t t = 0; t < trials; ++t) {
    FinSuppFunction phi = random_coset_function(dec_a, alg, sampler, 2);
    FinSuppFunction psi = random_coset_function(dec_b, alg, sampler, 2);
    FinSuppFunction phi2 = random_coset_function(dec_a, alg, sampler, 2);
    FinSuppFunction psi2 = random_coset_function(dec_b, alg, sampler, 2);
    ProductFunction left = alpha_tensor(phi, psi);
    ProductFunction right = alpha_tensor(phi2, psi2);
    report.require(product_inner(left, right) ==
                       tensor_inner(phi, psi, phi2, psi2),
                   "alpha_tensor breaks the inner product at trial " +
                       std::to_string(t));
    FinSuppFunction f = random_group_function(group, alg, sampler, 2);
    report.require(alpha_tensor(convolve_left(f, phi), psi) ==
                       product_act_left(f, left),
                   "alpha_tensor breaks the left action at trial " +
                       std::to_string(t));
    report.require(alpha_tensor(phi, convolve_right(psi, f)) ==
                       product_act_right(left, f),
                   "alpha_tensor breaks the right action at trial " +
                       std::to_string(t));
  }
  return report;
}

std::vector<std::int64_t> coprime_primes(std::int64_t N) {
  std::vector<std::int64_t> out;
  for (std::int64_t p : {2, 3, 5, 7, 13})
    if (N % p != 0) out.push_back(p);
  return out;
}

CheckReport suite_commute(std::int64_t N) {
  CheckReport report;
  report.name = "commute(level " + std::to_string(N) + ")";
  ModularSymbolSpace space = build_space(N);
  CongruenceSubgroup group =
      N == 1 ? CongruenceSubgroup::sl2z() : CongruenceSubgroup::gamma0(N);
  std::vector<std::int64_t> ps = coprime_primes(N);
  std::vector<RatMat> mats;
  for (std::int64_t p : ps)
    mats.push_back(
        hecke_matrix(decompose(group, Mat2::diag(1, static_cast<long>(p))),
                     space.basis)
            .mat);
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      report.require(mats[i] * mats[j] == mats[j] * mats[i],
                     "T_" + std::to_string(ps[i]) + " and T_" +
                         std::to_string(ps[j]) + " do not commute");
  return report;
}

CheckReport suite_ring_hom(std::int64_t N) {
  CheckReport report;
  report.name = "ring-hom(level " + std::to_string(N) + ")";
  CongruenceSubgroup group =
      N == 1 ? CongruenceSubgroup::sl2z() : CongruenceSubgroup::gamma0(N);
  std::vector<std::int64_t> ps = {2, 3, 5};
  for (std::int64_t p : ps)
    for (std::int64_t q : ps) {
      if (N % p == 0 || N % q == 0) continue;
      CheckReport sub = ring_hom_check(N, hecke_coset_tn(group, p),
                                       hecke_coset_tn(group, q));
      report.require(sub.pass(), "matrix homomorphism fails for T_" +
                                     std::to_string(p) + ", T_" +
                                     std::to_string(q));
    }
  return report;
}

CheckReport suite_eigs(std::int64_t N) {
  CheckReport report;
  report.name = "eigs(level " + std::to_string(N) + ")";
  ModularSymbolSpace space = build_space(N);
  CongruenceSubgroup group =
      N == 1 ? CongruenceSubgroup::sl2z() : CongruenceSubgroup::gamma0(N);
  RatMat cuspidal = cuspidal_subspace(space.basis, space.cusps);
  for (std::int64_t p : coprime_primes(N)) {
    Mat2 ap_mat = Mat2::diag(1, static_cast<long>(p));
    HeckeMatrix M = hecke_matrix(decompose(group, ap_mat), space.basis);
    // boundary compatibility and the Eisenstein eigenvalue p + 1
    RatMat C = cusp_action(group, space.cusps, ap_mat);
    report.require(space.cusps.boundary_basis * M.mat ==
                       C * space.cusps.boundary_basis,
                   "boundary does not intertwine T_" + std::to_string(p));
    for (std::size_t col = 0; col < C.cols(); ++col) {
      Rational colsum(0);
      for (std::size_t r = 0; r < C.rows(); ++r) colsum += C.at(r, col);
      report.require(colsum == Rational(static_cast<long>(p + 1)),
                     "cusp action degree is not p+1");
    }
    if (cuspidal.cols() > 0) {
      EigenData data = eigen_data(restrict_to_subspace(M.mat, cuspidal));
      if (N == 11) {
        std::int64_t ap = ap_oracle(curve_11a1(), p);
        bool match = data.eigenvalues.size() == 1 &&
                     data.eigenvalues[0].first ==
                         Integer(static_cast<long>(ap)) &&
                     data.eigenvalues[0].second == cuspidal.cols();
        report.require(match, "cuspidal eigenvalue of T_" + std::to_string(p) +
                                  " does not match the point count oracle");
      } else {
        report.require(true, "");
      }
    }
  }
  return report;
}

CheckReport suite_heckemod(const CongruenceSubgroup& group, const Mat2& a,
                           const Mat2& b, std::uint64_t seed) {
  CheckReport report = heckemod_check(group, a, b,
                                      CoefficientAlgebra::trivial(), seed);
  report.name = "heckemod(" + group.name() + ")";
  return report;
}

// ---- subcommands -------------------------------------------------------

int cmd_decompose(const GroupChoice& gc, const std::string& matrix, long cap,
                  bool json, std::ostream& out) {
  CongruenceSubgroup group = gc.resolve();
  CosetDecomposition dec = decompose(group, mat2_from_string(matrix), cap);
  if (json) {
    Json j = decomposition_to_json(dec);
    j = Json{{"schema", 1}, {"engine", kEngineVersion}, {"decomposition", j}};
    out << j.dump(2) << "\n";
  } else {
    out << group.name() << " : degree " << dec.degree() << "\n";
    for (std::size_t i = 0; i < dec.degree(); ++i)
      out << "  a_" << (i + 1) << " = " << to_string(dec.reps()[i])
          << "   delta_" << (i + 1) << " = " << to_string(dec.deltas()[i])
          << "\n";
  }
  return kExitPass;
}

int cmd_product(const GroupChoice& gc, const std::string& a_str,
                const std::string& b_str, bool no_witness, bool json,
                std::ostream& out) {
  CongruenceSubgroup group = gc.resolve();
  DoubleCoset A(group, mat2_from_string(a_str));
  DoubleCoset B(group, mat2_from_string(b_str));
  auto [prod, witness] = shimura_product(A, B);
  witness.verify();
  if (json) {
    Json j{{"schema", 1},
           {"engine", kEngineVersion},
           {"product", hecke_element_to_json(prod)}};
    if (!no_witness) j["witness"] = witness_to_json(witness);
    out << j.dump(2) << "\n";
  } else {
    out << "[" << A.label().to_string() << "] * [" << B.label().to_string()
        << "] =";
    for (const auto& [label, term] : prod.terms())
      out << "  " << term.second << "*[" << label.to_string() << "]";
    out << "\n";
    if (!no_witness)
      for (const WitnessOrbit& orbit : witness.orbits)
        out << "  z = " << to_string(orbit.z) << "  m = " << orbit.m
            << "  d = " << orbit.d << "\n";
  }
  return kExitPass;
}

Json ratmat_to_json(const RatMat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(to_string(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

int cmd_hecke_matrix(const GroupChoice& gc, std::int64_t p, bool cuspidal,
                     bool json, bool csv, std::ostream& out) {
  std::int64_t N = gc.level();
  CongruenceSubgroup group = gc.resolve();
  ModularSymbolSpace space = build_space(N);
  HeckeMatrix M = hecke_matrix(
      decompose(group, Mat2::diag(1, static_cast<long>(p))), space.basis);
  RatMat shown = M.mat;
  if (cuspidal) {
    RatMat sub = cuspidal_subspace(space.basis, space.cusps);
    shown = restrict_to_subspace(M.mat, sub);
  }
  EigenData data = eigen_data(shown);
  if (json) {
    Json eig = Json::array();
    for (const auto& [value, mult] : data.eigenvalues)
      eig.push_back(Json{{"value", value.get_str()}, {"multiplicity", mult}});
    Json cp = Json::array();
    for (const Rational& c : data.charpoly) cp.push_back(to_string(c));
    Json j{{"schema", 1},      {"engine", kEngineVersion},
           {"level", N},       {"p", p},
           {"cuspidal", cuspidal}, {"dim", shown.rows()},
           {"matrix", ratmat_to_json(shown)}, {"charpoly", cp},
           {"eigenvalues", eig}};
    out << j.dump(2) << "\n";
  } else if (csv) {
    for (std::size_t r = 0; r < shown.rows(); ++r) {
      for (std::size_t c = 0; c < shown.cols(); ++c)
        out << (c ? "," : "") << to_string(shown.at(r, c));
      out << "\n";
    }
  } else {
    out << "T_" << p << " on level " << N << (cuspidal ? " (cuspidal)" : "")
        << ", dim " << shown.rows() << "\n";
    for (std::size_t r = 0; r < shown.rows(); ++r) {
      out << "  ";
      for (std::size_t c = 0; c < shown.cols(); ++c)
        out << to_string(shown.at(r, c)) << (c + 1 < shown.cols() ? " " : "");
      out << "\n";
    }
  }
  return kExitPass;
}

int cmd_eigs(const GroupChoice& gc, const std::string& plist, bool json,
             bool csv, std::ostream& out) {
  std::int64_t N = gc.level();
  CongruenceSubgroup group = gc.resolve();
  ModularSymbolSpace space = build_space(N);
  RatMat sub = cuspidal_subspace(space.basis, space.cusps);
  std::vector<std::int64_t> ps;
  std::stringstream ss(plist);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) ps.push_back(std::stoll(item));
  Json results = Json::array();
  if (csv) out << "p,charpoly,eigenvalues\n";
  for (std::int64_t p : ps) {
    HeckeMatrix M = hecke_matrix(
        decompose(group, Mat2::diag(1, static_cast<long>(p))), space.basis);
    RatMat restricted = sub.cols() ? restrict_to_subspace(M.mat, sub)
                                   : RatMat(0, 0);
    EigenData data = eigen_data(restricted);
    Json eig = Json::array();
    std::string eig_str;
    for (const auto& [value, mult] : data.eigenvalues) {
      eig.push_back(Json{{"value", value.get_str()}, {"multiplicity", mult}});
      if (!eig_str.empty()) eig_str += " ";
      eig_str += value.get_str() + "^" + std::to_string(mult);
    }
    Json cp = Json::array();
    std::string cp_str;
    for (const Rational& c : data.charpoly) {
      cp.push_back(to_string(c));
      if (!cp_str.empty()) cp_str += " ";
      cp_str += to_string(c);
    }
    results.push_back(Json{{"p", p}, {"charpoly", cp}, {"eigenvalues", eig}});
    if (csv)
      out << p << ",\"" << cp_str << "\",\"" << eig_str << "\"\n";
    else if (!json)
      out << "T_" << p << "  charpoly [" << cp_str << "]  eigenvalues "
          << (eig_str.empty() ? "(none)" : eig_str) << "\n";
  }
  if (json) {
    Json j{{"schema", 1},
           {"engine", kEngineVersion},
           {"level", N},
           {"cuspidal_dim", sub.cols()},
           {"results", results}};
    out << j.dump(2) << "\n";
  }
  return kExitPass;
}

int cmd_verify(const GroupChoice& gc, const std::string& suite,
               const std::string& a_str, const std::string& b_str,
               std::uint64_t seed, std::size_t trials, bool json,
               std::ostream& out) {
  CongruenceSubgroup group = gc.resolve();
  Mat2 a = mat2_from_string(a_str);
  Mat2 b = mat2_from_string(b_str);
  auto start = std::chrono::steady_clock::now();
  std::vector<CheckReport> reports;
  auto want = [&suite](const char* name) {
    return suite == "all" || suite == name;
  };
  if (want("cocycle")) reports.push_back(suite_cocycle(group, a, seed, trials));
  if (want("bieq")) reports.push_back(suite_bieq(group, a, b, seed, trials));
  if (want("shimura-witness")) reports.push_back(suite_shimura_witness(group));
  if (want("unitary")) {
    reports.push_back(suite_unitary_coset(group, a, CoefficientAlgebra::trivial(),
                                          "(trivial)", seed, trials));
    reports.push_back(suite_unitary_coset(group, a,
                                          CoefficientAlgebra::finite_set(7),
                                          "(finite-set)", seed, trials));
    reports.push_back(suite_unitary_tensor(group, a, b,
                                           CoefficientAlgebra::trivial(),
                                           "(trivial)", seed, trials));
    reports.push_back(suite_unitary_tensor(group, a, b,
                                           CoefficientAlgebra::finite_set(7),
                                           "(finite-set)", seed, trials));
  }
  if (want("heckemod")) reports.push_back(suite_heckemod(group, a, b, seed));
  if (want("ring-hom")) reports.push_back(suite_ring_hom(gc.level()));
  if (want("commute")) reports.push_back(suite_commute(gc.level()));
  if (want("eigs")) reports.push_back(suite_eigs(gc.level()));
  if (reports.empty())
    throw CLI::ValidationError("unknown suite: " + suite);
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& x, const CheckReport& y) {
              return x.name < y.name;
            });
  double elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return emit_report(suite, reports, json, elapsed, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact double-coset Hecke engine"};
  app.require_subcommand(1);

  GroupChoice gc;
  std::string matrix = "1,0;0,2";
  std::string a_str = "1,0;0,2";
  std::string b_str = "1,0;0,3";
  std::string suite = "all";
  std::string plist = "2,3,5,7,13";
  long cap = kDefaultCosetCap;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::int64_t p = 2;
  bool json = false, csv = false, no_witness = false, cuspidal = false;

  CLI::App* dec_cmd = app.add_subcommand("decompose",
                                         "decompose a double coset into right cosets");
  add_group_options(dec_cmd, gc);
  dec_cmd->add_option("--matrix", matrix, "integral matrix \"a,b;c,d\"")
      ->required();
  dec_cmd->add_option("--cap", cap, "coset cap");
  dec_cmd->add_flag("--json", json, "JSON output");

  CLI::App* prod_cmd = app.add_subcommand("product",
                                          "Shimura product of two double cosets");
  add_group_options(prod_cmd, gc);
  prod_cmd->add_option("--a", a_str, "left factor")->required();
  prod_cmd->add_option("--b", b_str, "right factor")->required();
  prod_cmd->add_flag("--no-witness", no_witness, "suppress witness data");
  prod_cmd->add_flag("--json", json, "JSON output");

  CLI::App* hm_cmd = app.add_subcommand("hecke-matrix",
                                        "Hecke operator matrix on modular symbols");
  add_group_options(hm_cmd, gc);
  hm_cmd->add_option("--p", p, "operator index (coprime to the level)")
      ->required();
  hm_cmd->add_flag("--cuspidal", cuspidal, "restrict to the cuspidal subspace");
  hm_cmd->add_flag("--json", json, "JSON output");
  hm_cmd->add_flag("--csv", csv, "CSV matrix output");

  CLI::App* eigs_cmd = app.add_subcommand("eigs",
                                          "cuspidal eigenvalues for a prime list");
  add_group_options(eigs_cmd, gc);
  eigs_cmd->add_option("--p-list", plist, "comma separated primes");
  eigs_cmd->add_flag("--json", json, "JSON output");
  eigs_cmd->add_flag("--csv", csv, "CSV output");

  CLI::App* verify_cmd = app.add_subcommand("verify",
                                            "run a deterministic verification suite");
  add_group_options(verify_cmd, gc);
  verify_cmd->add_option("--suite", suite,
                         "cocycle|bieq|shimura-witness|unitary|heckemod|"
                         "ring-hom|commute|eigs|all");
  verify_cmd->add_option("--a", a_str, "first double coset representative");
  verify_cmd->add_option("--b", b_str, "second double coset representative");
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--trials", trials, "randomized trial count");
  verify_cmd->add_flag("--json", json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (dec_cmd->parsed()) return cmd_decompose(gc, matrix, cap, json, out);
    if (prod_cmd->parsed())
      return cmd_product(gc, a_str, b_str, no_witness, json, out);
    if (hm_cmd->parsed()) return cmd_hecke_matrix(gc, p, cuspidal, json, csv, out);
    if (eigs_cmd->parsed()) return cmd_eigs(gc, plist, json, csv, out);
    if (verify_cmd->parsed())
      return cmd_verify(gc, suite, a_str, b_str, seed, trials, json, out);
    err << "usage error: no subcommand\n";
    return kExitUsage;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}

}  // namespace hecke
