#include "hecke/json_io.hpp"

namespace hecke {

Json mat2_to_json(const Mat2& m) {
  return Json{{"m", Json::array({Json::array({to_string(m.a), to_string(m.b)}),
                                 Json::array({to_string(m.c), to_string(m.d)})})}};
}

Mat2 mat2_from_json(const Json& j) {
  const Json& rows = j.at("m");
  return {rational_from_string(rows.at(0).at(0).get<std::string>()),
          rational_from_string(rows.at(0).at(1).get<std::string>()),
          rational_from_string(rows.at(1).at(0).get<std::string>()),
          rational_from_string(rows.at(1).at(1).get<std::string>())};
}

Json group_to_json(const CongruenceSubgroup& g) {
  switch (g.kind()) {
    case GroupKind::Full:
      return Json{{"kind", "sl2z"}, {"level", 1}};
    case GroupKind::Gamma0:
      return Json{{"kind", "gamma0"}, {"level", g.level()}};
    case GroupKind::Gamma1:
      return Json{{"kind", "gamma1"}, {"level", g.level()}};
    case GroupKind::GammaFull:
      return Json{{"kind", "gamma"}, {"level", g.level()}};
  }
  throw std::logic_error("unreachable");
}

CongruenceSubgroup group_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  std::int64_t level = j.value("level", 1);
  if (kind == "sl2z") return CongruenceSubgroup::sl2z();
  if (kind == "gamma0") return CongruenceSubgroup::gamma0(level);
  if (kind == "gamma1") return CongruenceSubgroup::gamma1(level);
  if (kind == "gamma") return CongruenceSubgroup::gamma_full(level);
  throw std::invalid_argument("unknown group kind: " + kind);
}

Json decomposition_to_json(const CosetDecomposition& dec) {
  Json reps = Json::array();
  for (const Mat2& r : dec.reps()) reps.push_back(mat2_to_json(r));
  Json deltas = Json::array();
  for (const Mat2& d : dec.deltas()) deltas.push_back(mat2_to_json(d));
  return Json{{"group", group_to_json(dec.group())},
              {"a", mat2_to_json(dec.a())},
              {"degree", dec.degree()},
              {"reps", reps},
              {"deltas", deltas}};
}

Json witness_to_json(const ProductWitness& w) {
  Json orbits = Json::array();
  for (const WitnessOrbit& orbit : w.orbits) {
    Json pairs = Json::array();
    for (const auto& [i, j] : orbit.pairs)
      pairs.push_back(Json::array({i, j}));
    Json transversal = Json::array();
    for (const Mat2& g : orbit.transversal) transversal.push_back(mat2_to_json(g));
    orbits.push_back(Json{{"z", mat2_to_json(orbit.z)},
                          {"m", orbit.m},
                          {"d", orbit.d},
                          {"pairs", pairs},
                          {"transversal", transversal}});
  }
  return Json{{"left_degree", w.left->degree()},
              {"right_degree", w.right->degree()},
              {"orbits", orbits}};
}

Json hecke_element_to_json(const HeckeElement& e) {
  Json terms = Json::array();
  for (const auto& [label, term] : e.terms())
    terms.push_back(Json{{"label", label.to_string()},
                         {"rep", mat2_to_json(term.first.rep())},
                         {"degree", term.first.degree()},
                         {"coeff", term.second}});
  return Json{{"group", group_to_json(e.group())}, {"terms", terms}};
}

}  // namespace hecke
