#pragma once

#include <json.hpp>

#include <string>

#include "albert/classify.hpp"
#include "albert/f4group.hpp"
#include "albert/stabilizer.hpp"
#include "albert/transport.hpp"

namespace albert {

using json = nlohmann::json;

// Octonion: array of 8 scalar strings ("p/q" exact, decimal on the float backend).
template <class S>
json to_json(const Octonion<S>& o) {
  json a = json::array();
  for (int i = 0; i < 8; ++i) a.push_back(scalar_ops<S>::str(o[i]));
  return a;
}

template <class S>
Octonion<S> octonion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8) throw ParseError("octonion: expected array of 8 scalars");
  Octonion<S> o;
  for (int i = 0; i < 8; ++i) o[i] = scalar_ops<S>::parse(j[static_cast<std::size_t>(i)].get<std::string>());
  return o;
}

// JordanElement: {"xi": [3], "x": [3 octonions]}
template <class S>
json to_json(const JordanElement<S>& X) {
  json xi = json::array();
  for (int i = 0; i < 3; ++i) xi.push_back(scalar_ops<S>::str(X.xi[static_cast<std::size_t>(i)]));
  json x = json::array();
  for (int i = 0; i < 3; ++i) x.push_back(to_json(X.x[static_cast<std::size_t>(i)]));
  return json{{"xi", xi}, {"x", x}};
}

template <class S>
JordanElement<S> jordan_from_json(const json& j) {
  if (!j.contains("xi") || !j.contains("x")) throw ParseError("jordan element: need 'xi' and 'x'");
  const json& xi = j.at("xi");
  const json& x = j.at("x");
  if (!xi.is_array() || xi.size() != 3 || !x.is_array() || x.size() != 3)
    throw ParseError("jordan element: 'xi' must have 3 scalars and 'x' 3 octonions");
  JordanElement<S> X;
  for (int i = 0; i < 3; ++i) {
    X.xi[static_cast<std::size_t>(i)] = scalar_ops<S>::parse(xi[static_cast<std::size_t>(i)].get<std::string>());
    X.x[static_cast<std::size_t>(i)] = octonion_from_json<S>(x[static_cast<std::size_t>(i)]);
  }
  return X;
}

template <class S>
json to_json(const Mat<S>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_ops<S>::str(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class S>
Mat<S> mat_from_json(const json& j, int r, int c) {
  if (!j.is_array() || static_cast<int>(j.size()) != r) throw ParseError("matrix: bad row count");
  Mat<S> m(r, c);
  for (int i = 0; i < r; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != c)
      throw ParseError("matrix: bad column count");
    for (int k = 0; k < c; ++k)
      m(i, k) = scalar_ops<S>::parse(row[static_cast<std::size_t>(k)].get<std::string>());
  }
  return m;
}

template <class S>
json to_json(const TrialityTriple<S>& t) {
  return json{{"g1", to_json(t.g1)}, {"g2", to_json(t.g2)}, {"g3", to_json(t.g3)}};
}

template <class S>
TrialityTriple<S> triple_from_json(const json& j) {
  return TrialityTriple<S>{mat_from_json<S>(j.at("g1"), 8, 8), mat_from_json<S>(j.at("g2"), 8, 8),
                           mat_from_json<S>(j.at("g3"), 8, 8)};
}

template <class S>
json to_json(const Atom<S>& atom) {
  return std::visit(
      [](const auto& a) -> json {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, AtomPhi0<S>>) {
          return json{{"type", "phi0"}, {"triple", to_json(a.t)}};
        } else if constexpr (std::is_same_v<T, AtomExpRot<S>>) {
          return json{{"type", "exp_rot"},
                      {"a", to_json(a.a)},
                      {"c", scalar_ops<S>::str(a.c)},
                      {"s", scalar_ops<S>::str(a.s)}};
        } else if constexpr (std::is_same_v<T, AtomExpBoost<S>>) {
          return json{{"type", "exp_boost"},
                      {"i", a.i + 1},
                      {"a", to_json(a.a)},
                      {"ch", scalar_ops<S>::str(a.ch)},
                      {"sh", scalar_ops<S>::str(a.sh)}};
        } else if constexpr (std::is_same_v<T, AtomSigma>) {
          return json{{"type", "sigma"}, {"i", a.i + 1}};
        } else {
          const char* names[] = {"exp_gm2", "exp_gm1", "", "exp_g1", "exp_g2"};
          return json{{"type", names[a.k + 2]}, {"arg", to_json(a.arg)}};
        }
      },
      atom);
}

template <class S>
Atom<S> atom_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "phi0") return AtomPhi0<S>{triple_from_json<S>(j.at("triple"))};
  if (type == "exp_rot")
    return AtomExpRot<S>{octonion_from_json<S>(j.at("a")),
                         scalar_ops<S>::parse(j.at("c").get<std::string>()),
                         scalar_ops<S>::parse(j.at("s").get<std::string>())};
  if (type == "exp_boost")
    return AtomExpBoost<S>{j.at("i").get<int>() - 1, octonion_from_json<S>(j.at("a")),
                           scalar_ops<S>::parse(j.at("ch").get<std::string>()),
                           scalar_ops<S>::parse(j.at("sh").get<std::string>())};
  if (type == "sigma") return AtomSigma{j.at("i").get<int>() - 1};
  if (type == "exp_g1") return AtomExpG<S>{1, octonion_from_json<S>(j.at("arg"))};
  if (type == "exp_g2") return AtomExpG<S>{2, octonion_from_json<S>(j.at("arg"))};
  if (type == "exp_gm1") return AtomExpG<S>{-1, octonion_from_json<S>(j.at("arg"))};
  if (type == "exp_gm2") return AtomExpG<S>{-2, octonion_from_json<S>(j.at("arg"))};
  throw ParseError("unknown atom type: " + type);
}

// Operator: {"word": [atoms], "matrix": optional, "verified": bool}
template <class S>
json to_json(const F4Operator<S>& g, bool with_matrix = true) {
  json word = json::array();
  for (const auto& a : g.word) word.push_back(to_json(a));
  json out{{"word", word}, {"verified", g.verified}};
  if (with_matrix) out["matrix"] = to_json(g.m);
  return out;
}

template <class S>
F4Operator<S> operator_from_json(const json& j) {
  F4Operator<S> g;
  if (j.contains("word")) {
    for (const auto& aj : j.at("word")) g.word.push_back(atom_from_json<S>(aj));
  }
  if (j.contains("matrix")) {
    g.m = mat_from_json<S>(j.at("matrix"), 27, 27);
  } else {
    g.m = Mat<S>::identity(27);
    for (const auto& a : g.word) g.m = atom_matrix(a) * g.m;
  }
  if (j.contains("verified")) g.verified = j.at("verified").get<bool>();
  return g;
}

inline json to_json(const AlgebraicReal& r) {
  if (r.is_rational()) return json{{"rational", scalar_ops<Rational>::str(r.rational())}};
  return json{{"defining",
               json{{"t", scalar_ops<Rational>::str(r.defining().t)},
                    {"s", scalar_ops<Rational>::str(r.defining().s)},
                    {"d", scalar_ops<Rational>::str(r.defining().d)}}},
              {"lo", scalar_ops<Rational>::str(r.lo())},
              {"hi", scalar_ops<Rational>::str(r.hi())},
              {"approx", scalar_ops<double>::str(r.approx())}};
}

inline json to_json(const OrbitClass& oc) {
  json params;
  if (const auto* p = std::get_if<ParamsDistinct>(&oc.params)) {
    params["roots"] = json::array({to_json(p->roots[0]), to_json(p->roots[1]), to_json(p->roots[2])});
    params["i"] = p->h_index;
  } else if (const auto* p4 = std::get_if<ParamsComplexPair>(&oc.params)) {
    params["lambda1"] = to_json(p4->lambda1);
    params["p"] = to_json(p4->p);
    params["q_squared"] = to_json(p4->q_squared);
  } else if (const auto* pd = std::get_if<ParamsDoubleRoot>(&oc.params)) {
    params["lambda1"] = scalar_ops<Rational>::str(pd->lambda1);
    params["lambda2"] = scalar_ops<Rational>::str(pd->lambda2);
  } else if (const auto* pt = std::get_if<ParamsTripleRoot>(&oc.params)) {
    params["lambda"] = scalar_ops<Rational>::str(pt->lambda);
  }
  json certs;
  if (!oc.gaps.empty()) {
    json g = json::array();
    for (const auto& c : oc.gaps)
      g.push_back(json{{"root_index", c.root_index},
                       {"side", c.side == GapSide::GeqB ? "GeqB" : "LeqA"}});
    certs["gap_decisions"] = g;
  }
  if (oc.e_class) certs["e_lambda1_class"] = to_string(*oc.e_class);
  if (oc.w_class) certs["w_lambda1_class"] = to_string(*oc.w_class);
  if (oc.p_class) certs["p_traceless_class"] = to_string(*oc.p_class);
  const CanonicalForm cf = canonical_form(oc);
  json canonical;
  if (cf.exact) {
    canonical = to_json(*cf.exact);
  } else {
    canonical = json{{"symbolic", params}, {"approx", to_json(cf.approx)}};
  }
  return json{{"case", oc.case_id}, {"params", params}, {"canonical", canonical},
              {"certificates", certs}};
}

inline json to_json(const TransportResult& r) {
  json out;
  out["exact"] = r.exact;
  if (r.exact) {
    out["word"] = to_json(*r.g_exact, /*with_matrix=*/false)["word"];
    out["target"] = to_json(*r.target_exact);
    out["residual"] = "0";
  } else {
    out["word"] = to_json(*r.g_float, /*with_matrix=*/false)["word"];
    out["target"] = to_json(*r.target_float);
    out["residual"] = scalar_ops<double>::str(r.residual);
    out["charpoly_drift"] = scalar_ops<double>::str(r.charpoly_drift);
  }
  return out;
}

inline json to_json(const StabilizerWitness& w) {
  json gens = json::array();
  for (const auto& g : w.generators) gens.push_back(to_json(g, /*with_matrix=*/false));
  return json{{"case", w.case_id},
              {"group_type", w.group_type},
              {"generators", gens},
              {"fixed_point", to_json(w.fixed_point)}};
}

}  // namespace albert
