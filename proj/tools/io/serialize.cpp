#include "serialize.hpp"

#include <charconv>
#include <stdexcept>

namespace skein::io {
namespace {

json pair_json(IntPair c) { return json::array({c.n, c.k}); }
IntPair pair_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }
cplx cplx_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

const char* basis_name(Variant v) {
  switch (v) {
    case Variant::Threaded: return "threaded";
    case Variant::Geometric: return "geometric";
    case Variant::Power: return "power";
  }
  return "threaded";
}

Variant basis_from(const std::string& s) {
  if (s == "threaded") return Variant::Threaded;
  if (s == "geometric") return Variant::Geometric;
  if (s == "power") return Variant::Power;
  throw std::invalid_argument("unknown basis '" + s + "'");
}

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(cplx_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from(const json& j) {
  const auto n = static_cast<Eigen::Index>(j.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (j.at(i).size() != j.size()) throw std::invalid_argument("matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = cplx_from(j.at(i).at(k));
  }
  return m;
}

}  // namespace

std::string exact_decimal(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

json to_json(const CoeffElem& c) {
  json out = json::array();
  for (const auto& [e, k] : c.terms())
    out.push_back({{"exp", {e.a2, e.v1, e.v2, e.d0, e.d1}}, {"c", k.str()}});
  return out;
}

CoeffElem coeff_from_json(const json& j) {
  CoeffElem out;
  for (const auto& t : j) {
    const auto& e = t.at("exp");
    if (e.size() != 5) throw std::invalid_argument("exponent vector needs five entries");
    Exponent ex{e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>(), e[4].get<int>()};
    out += CoeffElem::monomial(ex, Integer(t.at("c").get<std::string>()));
  }
  return out;
}

json to_json(const HalfLaurent& h) { return to_json(CoeffElem(h)); }

json to_json(const SkeinElem& x, const RewriteSystem& sys) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) {
    json word = json::array();
    for (char id : w) word.push_back(sys.alphabet().names.at(static_cast<std::size_t>(id)));
    terms.push_back({{"word", word}, {"coeff", to_json(c)}});
  }
  return {{"presentation", sys.name()}, {"terms", terms}};
}

SkeinElem skein_from_json(const json& j, const RewriteSystem& sys) {
  if (j.contains("presentation") && j.at("presentation").get<std::string>() != sys.name())
    throw std::invalid_argument("element of " + j.at("presentation").get<std::string>() + " read as " + sys.name());
  SkeinElem out;
  for (const auto& t : j.at("terms")) {
    Word w;
    for (const auto& name : t.at("word")) {
      auto id = sys.alphabet().find(name.get<std::string>());
      if (!id) throw std::invalid_argument("unknown generator " + name.get<std::string>());
      w.push_back(*id);
    }
    out.add_term(w, coeff_from_json(t.at("coeff")));
  }
  return out;
}

json to_json(const TorusExpansion& x) {
  json terms = json::array();
  for (const auto& [c, h] : x.terms()) terms.push_back({{"curve", pair_json(c)}, {"coeff", to_json(h)}});
  return {{"terms", terms}, {"scalar", to_json(x.scalar())}};
}

TorusExpansion torus_from_json(const json& j) {
  TorusExpansion out;
  for (const auto& t : j.at("terms")) out.add(pair_from(t.at("curve")), coeff_from_json(t.at("coeff")).to_half_laurent());
  out.add_scalar(coeff_from_json(j.at("scalar")).to_half_laurent());
  return out;
}

json to_json(const CurveExpansion& x) {
  json terms = json::array();
  const bool threaded = x.basis() == Variant::Threaded;
  for (const auto& [c, k] : x.terms())
    for (const auto& [ij, h] : k.by_boundary_monomial())
      terms.push_back({{"curve", pair_json(c)},
                       {"threaded", threaded},
                       {"dpow", {ij.first, ij.second}},
                       {"coeff", to_json(h)}});
  return {{"basis", basis_name(x.basis())}, {"terms", terms}, {"scalar", to_json(x.scalar())}};
}

CurveExpansion curves_from_json(const json& j) {
  CurveExpansion out(basis_from(j.value("basis", std::string("threaded"))));
  for (const auto& t : j.at("terms")) {
    const auto& d = t.at("dpow");
    out.add(pair_from(t.at("curve")),
            coeff_from_json(t.at("coeff")) * CoeffElem::d0(d.at(0).get<int>()) * CoeffElem::d1(d.at(1).get<int>()));
  }
  out.add_scalar(coeff_from_json(j.at("scalar")));
  return out;
}

json to_json(const ConfluenceReport& r, const RewriteSystem& sys) {
  json amb = json::array();
  for (const auto& a : r.ambiguities) {
    json item = {{"word", sys.alphabet().render(a.word)},
                 {"rules", {a.first_rule, a.second_rule}},
                 {"resolvable", a.resolvable}};
    if (!a.resolvable) item["difference"] = sys.render(a.difference);
    amb.push_back(std::move(item));
  }
  return {{"presentation", r.system},
          {"ambiguities", r.ambiguities.size()},
          {"unresolved", r.unresolved()},
          {"confluent", r.confluent()},
          {"details", amb}};
}

json to_json(const HomReport& r, const RewriteSystem& target) {
  json res = json::array();
  for (const auto& h : r.residues) res.push_back({{"relation", h.relation}, {"residue", target.render(h.residue)}, {"zero", h.zero()}});
  return {{"ok", r.ok()}, {"residues", res}};
}

json to_json(const GroupedCoeff& g) {
  json out = json::array();
  for (const auto& [ef, h] : g) out.push_back({{"epow", ef.first}, {"fpow", ef.second}, {"coeff", to_json(h)}});
  return out;
}

json to_json(const PositivityRecord& r) {
  json grouped = json::array();
  auto add = [&](const std::optional<IntPair>& c, const CoeffElem& k) {
    const auto g = to_grouped(k);
    json item = {{"curve", c ? pair_json(*c) : json(nullptr)}};
    if (g) item["coeff"] = to_json(*g);
    else item["coeff"] = nullptr;
    grouped.push_back(std::move(item));
  };
  for (const auto& [c, k] : r.threaded.terms()) add(c, k);
  add(std::nullopt, r.threaded.scalar());
  return {{"left", pair_json(r.left)},
          {"right", pair_json(r.right)},
          {"threaded", to_json(r.threaded)},
          {"geometric", to_json(r.geometric)},
          {"grouped", grouped},
          {"raw_positive", r.raw_positive},
          {"grouped_positive", r.grouped_positive},
          {"raw_counterexamples", r.raw_counterexamples},
          {"grouped_counterexamples", r.grouped_counterexamples}};
}

json to_json(const ShadowData& s) {
  return {{"N", s.N},         {"t1", cplx_json(s.t1)}, {"t2", cplx_json(s.t2)},  {"t3", cplx_json(s.t3)},
          {"d0", cplx_json(s.d0)}, {"d1", cplx_json(s.d1)}, {"v1", cplx_json(s.v1)}, {"v2", cplx_json(s.v2)},
          {"x", cplx_json(s.x)},   {"sqrt_v", cplx_json(s.sqrt_v)}};
}

ShadowData shadow_from_json(const json& j) {
  ShadowData s;
  s.N = j.at("N").get<int>();
  s.t1 = cplx_from(j.at("t1"));
  s.t2 = cplx_from(j.at("t2"));
  s.t3 = cplx_from(j.at("t3"));
  s.d0 = cplx_from(j.at("d0"));
  s.d1 = cplx_from(j.at("d1"));
  s.v1 = cplx_from(j.at("v1"));
  s.v2 = cplx_from(j.at("v2"));
  s.x = cplx_from(j.at("x"));
  s.sqrt_v = cplx_from(j.at("sqrt_v"));
  return s;
}

json to_json(const RepMatrices& m) {
  return {{"N", m.dim()}, {"alpha", matrix_json(m.alpha)}, {"beta", matrix_json(m.beta)}, {"gamma", matrix_json(m.gamma)}};
}

RepMatrices rep_from_json(const json& j) {
  return {matrix_from(j.at("alpha")), matrix_from(j.at("beta")), matrix_from(j.at("gamma"))};
}

json to_json(const AdmissibilityReport& r) {
  json conds = json::array();
  for (const auto& c : r.conditions) conds.push_back({{"name", c.name}, {"value", exact_decimal(c.value)}, {"pass", c.pass}});
  return {{"admissible", r.admissible}, {"E", cplx_json(r.E)}, {"conditions", conds}};
}

json to_json(const VerifyReport& r) {
  json rel = json::object();
  for (const auto& [label, v] : r.relation_residuals) rel[label] = exact_decimal(v);
  return {{"relation_residuals", rel},
          {"central_residuals",
           {{"t1", exact_decimal(r.t1_residual)}, {"t2", exact_decimal(r.t2_residual)}, {"t3", exact_decimal(r.t3_residual)}}},
          {"commutant_dim", r.commutant_dim},
          {"irreducible", r.irreducible},
          {"recovered",
           {{"t1", cplx_json(r.t1)}, {"t2", cplx_json(r.t2)}, {"t3", cplx_json(r.t3)}, {"d0", cplx_json(r.d0)}, {"d1", cplx_json(r.d1)}}}};
}

}  // namespace skein::io
