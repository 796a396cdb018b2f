#include "weakmix/certificate.hpp"

#include "weakmix/error.hpp"

namespace weakmix {

namespace {

json vec_list(const std::vector<FinSuppVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(finsupp_to_json(v));
  return a;
}

json poly_list(const std::vector<Poly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(poly_to_json(p));
  return a;
}

const json& at(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t size_at(const json& j, const char* key, const std::string& path) {
  const json& v = at(j, key, path);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    throw ParseError(path + "." + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

const json& array_at(const json& j, const char* key, const std::string& path) {
  const json& v = at(j, key, path);
  if (!v.is_array()) throw ParseError(path + "." + key, "expected an array");
  return v;
}

std::vector<Poly> poly_list_from_json(const json& j, Field f, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of polynomials");
  std::vector<Poly> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(poly_from_json(j[k], f, path + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<RatFuncVec> image_list_from_json(const json& j, Field f, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  std::vector<RatFuncVec> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "[" + std::to_string(k) + "]";
    if (!j[k].is_array()) throw ParseError(p, "expected an array of rational functions");
    std::vector<RatFunc> e;
    for (std::size_t a = 0; a < j[k].size(); ++a)
      e.push_back(ratfunc_from_json(j[k][a], f, p + "[" + std::to_string(a) + "]"));
    out.emplace_back(std::move(e));
  }
  return out;
}

std::vector<Representation> rep_list_from_json(const json& j, Field f, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  std::vector<Representation> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(representation_from_json(j[k], f, path + "[" + std::to_string(k) + "]"));
  return out;
}

json residuals(const OperatorSpec& T, const FinSuppVec& u, const AffineCylinder& c, const Poly& p) {
  json a = json::array();
  for (const auto& k : c.constraints)
    a.push_back(scalar_to_json(pairing(poly_dual_apply(T, p, k.functional), u) - k.value));
  return a;
}

}  // namespace

std::vector<FinSuppVec> finsupp_list_from_json(const json& j, Field f, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of vectors");
  std::vector<FinSuppVec> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(finsupp_from_json(j[k], f, path + "[" + std::to_string(k) + "]"));
  return out;
}

json to_json(GradedDegree d) {
  if (d.is_neg_inf()) return "-inf";
  return d.value();
}

GradedDegree degree_from_json(const json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "-inf") return GradedDegree::neg_inf();
  if (j.is_number_integer()) return GradedDegree(j.get<long>());
  throw ParseError(path, "expected an integer or \"-inf\"");
}

json to_json(const RatFuncVec& v) {
  json a = json::array();
  for (const auto& f : v.entries()) a.push_back(ratfunc_to_json(f));
  return a;
}

json to_json(const Syzygy& s) {
  return {{"generators", vec_list(s.generators)}, {"polys", poly_list(s.polys)}, {"degree_cap", s.degree_cap}};
}

json to_json(const IndependenceReport& r) {
  return {{"generators", vec_list(r.generators)},
          {"degree_cap", r.degree_cap},
          {"support_window", json::array({r.window_lo, r.window_hi})},
          {"pivots", r.pivots}};
}

IndependenceReport independence_from_json(const json& j, Field f, const std::string& path) {
  IndependenceReport r;
  r.generators = finsupp_list_from_json(at(j, "generators", path), f, path + ".generators");
  r.degree_cap = size_at(j, "degree_cap", path);
  const json& w = array_at(j, "support_window", path);
  if (w.size() != 2) throw ParseError(path + ".support_window", "expected [lo, hi]");
  r.window_lo = w[0].get<Index>();
  r.window_hi = w[1].get<Index>();
  r.pivots = array_at(j, "pivots", path).get<std::vector<Index>>();
  return r;
}

json to_json(const Representation& r) {
  return {{"x", finsupp_to_json(r.x)},
          {"basis", vec_list(r.basis)},
          {"q", poly_to_json(r.q)},
          {"p", poly_list(r.p)},
          {"j_image", to_json(j_image(r))}};
}

Representation representation_from_json(const json& j, Field f, const std::string& path) {
  Representation r;
  r.x = finsupp_from_json(at(j, "x", path), f, path + ".x");
  r.basis = finsupp_list_from_json(at(j, "basis", path), f, path + ".basis");
  r.q = poly_from_json(at(j, "q", path), f, path + ".q");
  r.p = poly_list_from_json(at(j, "p", path), f, path + ".p");
  return r;
}

json to_json(const TorsionCertificate& c) {
  return {{"x", finsupp_to_json(c.x)},
          {"annihilator", poly_to_json(c.annihilator)},
          {"annihilator_text", c.annihilator.to_string()},
          {"invariant_basis", vec_list(c.invariant_basis)}};
}

TorsionCertificate torsion_from_json(const json& j, Field f, const std::string& path) {
  TorsionCertificate c;
  c.x = finsupp_from_json(at(j, "x", path), f, path + ".x");
  c.annihilator = poly_from_json(at(j, "annihilator", path), f, path + ".annihilator");
  c.invariant_basis = finsupp_list_from_json(at(j, "invariant_basis", path), f, path + ".invariant_basis");
  return c;
}

json to_json(const NoTorsionReport& r) {
  json reps = json::array();
  for (const auto& rep : r.representations) reps.push_back(to_json(rep));
  return {{"generators", vec_list(r.generators)},
          {"basis", vec_list(r.basis)},
          {"representations", reps},
          {"common_denominator", poly_to_json(r.common_denominator)},
          {"degree_cap", r.degree_cap},
          {"independence", to_json(r.independence)}};
}

NoTorsionReport no_torsion_from_json(const json& j, Field f, const std::string& path) {
  NoTorsionReport r;
  r.generators = finsupp_list_from_json(at(j, "generators", path), f, path + ".generators");
  r.basis = finsupp_list_from_json(at(j, "basis", path), f, path + ".basis");
  r.representations = rep_list_from_json(at(j, "representations", path), f, path + ".representations");
  r.common_denominator = poly_from_json(at(j, "common_denominator", path), f, path + ".common_denominator");
  r.degree_cap = size_at(j, "degree_cap", path);
  r.independence = independence_from_json(at(j, "independence", path), f, path + ".independence");
  return r;
}

json to_json(const ClassifyVerdict& v) {
  json j = {{"verdict", verdict_name(v.verdict)},
            {"support_cap", v.support_cap},
            {"degree_cap", v.degree_cap}};
  if (v.torsion) j["torsion"] = to_json(*v.torsion);
  if (v.no_torsion) j["no_torsion"] = to_json(*v.no_torsion);
  if (v.verdict == Verdict::Unknown) j["reason"] = v.reason;
  return j;
}

json to_json(const GreedyResult& g, const std::vector<FinSuppVec>& xs, const IndependenceReport& basis_report) {
  json reps = json::array();
  for (const auto& [pos, rep] : g.representations) {
    json r = to_json(rep);
    r["position"] = pos;
    reps.push_back(r);
  }
  return {{"generators", vec_list(xs)},
          {"kept", g.kept},
          {"basis", vec_list(g.basis)},
          {"representations", reps},
          {"degree_cap", g.degree_cap},
          {"independence", to_json(basis_report)}};
}

json to_json(const BoundReport& r) {
  json reps = json::array(), images = json::array();
  for (const auto& rep : r.representations) reps.push_back(to_json(rep));
  for (const auto& im : r.images) images.push_back(to_json(im));
  return {{"basis_l", vec_list(r.basis_l)},
          {"basis_b", vec_list(r.basis_b)},
          {"representations", reps},
          {"j_images", images},
          {"delta_plus", to_json(r.delta_plus)},
          {"delta_minus", to_json(r.delta_minus)},
          {"attaining", finsupp_to_json(r.attaining)},
          {"m", r.m},
          {"degree_cap", r.degree_cap}};
}

json to_json(const AffineCylinder& c) {
  json a = json::array();
  for (const auto& k : c.constraints)
    a.push_back({{"functional", finsupp_to_json(k.functional)}, {"value", scalar_to_json(k.value)}});
  return {{"constraints", a}};
}

AffineCylinder cylinder_from_json(const json& j, Field f, const std::string& path) {
  AffineCylinder c;
  const json& a = array_at(j, "constraints", path);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::string p = path + ".constraints[" + std::to_string(k) + "]";
    FinSuppVec g = finsupp_from_json(at(a[k], "functional", p), f, p + ".functional");
    if (g.is_zero()) throw ParseError(p + ".functional", "functional must be nonzero");
    // Ball-shaped constraints (center, radius) reduce to their center slice.
    const bool ball = a[k].is_object() && a[k].contains("center");
    Scalar v = ball ? scalar_from_json(a[k]["center"], f, p + ".center")
                    : scalar_from_json(at(a[k], "value", p), f, p + ".value");
    c.constraints.push_back({std::move(g), std::move(v)});
  }
  return c;
}

json to_json(const OperatorSpec& T, const Witness& w) {
  const Poly one = Poly::one(T.field());
  return {{"u", finsupp_to_json(w.u)},
          {"residuals",
           {{"source", residuals(T, w.u, w.source, one)}, {"target", residuals(T, w.u, w.target, w.poly)}}},
          {"poly", poly_to_json(w.poly)},
          {"poly_text", w.poly.to_string()},
          {"source", to_json(w.source)},
          {"target", to_json(w.target)}};
}

json to_json(const Infeasible& w) {
  return {{"poly", poly_to_json(w.poly)},
          {"poly_text", w.poly.to_string()},
          {"source", to_json(w.source)},
          {"target", to_json(w.target)},
          {"lambda", finsupp_to_json(w.proof.lambda)}};
}

json to_json(const OperatorSpec& T, const VisitSchedule& s) {
  json visits = json::array();
  for (const auto& v : s.visits) {
    const Poly power = Poly::monomial(Scalar::one(T.field()), v.power);
    visits.push_back({{"power", v.power},
                      {"target", to_json(v.target)},
                      {"residuals", residuals(T, s.u, v.target, power)}});
  }
  return {{"u", finsupp_to_json(s.u)}, {"source", to_json(s.source)}, {"visits", visits}};
}

json make_certificate(const std::string& kind, const OperatorSpec& T, json body) {
  body["kind"] = kind;
  body["operator"] = operator_to_json(T);
  return body;
}

VerifyOutcome verify_certificate(const json& doc) {
  ScopedSearchDisable no_search;
  VerifyOutcome out;
  const json& kind_j = at(doc, "kind", "$");
  if (!kind_j.is_string()) throw ParseError("$.kind", "expected a string");
  out.kind = kind_j.get<std::string>();
  const OperatorSpec T = parse_operator(at(doc, "operator", "$"));
  const Field f = T.field();
  std::string why;
  auto result = [&](bool ok) {
    out.ok = ok;
    out.message = ok ? "all identities hold" : why;
    return out;
  };

  if (out.kind == "syzygy") {
    Syzygy s{finsupp_list_from_json(at(doc, "generators", "$"), f, "$.generators"),
             poly_list_from_json(at(doc, "polys", "$"), f, "$.polys"), size_at(doc, "degree_cap", "$")};
    return result(check_syzygy(T, s, &why));
  }
  if (out.kind == "independence") return result(check_independence(T, independence_from_json(doc, f), &why));
  if (out.kind == "representation") {
    Representation r = representation_from_json(doc, f);
    if (!check_representation(T, r, &why)) return result(false);
    if (doc.contains("j_image") &&
        !(image_list_from_json(json::array({doc["j_image"]}), f, "$.j_image")[0] == j_image(r))) {
      why = "j_image does not equal p_a / q";
      return result(false);
    }
    return result(true);
  }
  if (out.kind == "torsion") return result(check_torsion(T, torsion_from_json(doc, f), &why));
  if (out.kind == "no_torsion") return result(check_no_torsion(T, no_torsion_from_json(doc, f), &why));
  if (out.kind == "classify") {
    const std::string verdict = at(doc, "verdict", "$").get<std::string>();
    const std::size_t support_cap = size_at(doc, "support_cap", "$");
    const std::size_t degree_cap = size_at(doc, "degree_cap", "$");
    if (verdict == "NOT_TRANSITIVE")
      return result(check_torsion(T, torsion_from_json(at(doc, "torsion", "$"), f, "$.torsion"), &why));
    if (verdict == "MIXING_CERTIFIED_UP_TO") {
      NoTorsionReport r = no_torsion_from_json(at(doc, "no_torsion", "$"), f, "$.no_torsion");
      std::vector<FinSuppVec> expected;
      for (Index s = 1; s <= support_cap; ++s) expected.push_back(FinSuppVec::unit(f, s));
      if (r.generators != expected) {
        why = "report does not cover e_1*..e_" + std::to_string(support_cap) + "*";
        return result(false);
      }
      if (r.degree_cap != degree_cap) {
        why = "report degree cap differs from the verdict";
        return result(false);
      }
      return result(check_no_torsion(T, r, &why));
    }
    if (verdict == "UNKNOWN") {
      out.ok = true;
      out.message = "UNKNOWN verdict carries no identities";
      return out;
    }
    throw ParseError("$.verdict", "unknown verdict '" + verdict + "'");
  }
  if (out.kind == "independent_subset") {
    const auto xs = finsupp_list_from_json(at(doc, "generators", "$"), f, "$.generators");
    const auto basis = finsupp_list_from_json(at(doc, "basis", "$"), f, "$.basis");
    const auto kept = array_at(doc, "kept", "$").get<std::vector<std::size_t>>();
    if (kept.size() != basis.size()) {
      why = "kept positions and basis differ in size";
      return result(false);
    }
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (kept[i] >= xs.size() || !(xs[kept[i]] == basis[i])) {
        why = "basis vector " + std::to_string(i) + " is not the kept generator";
        return result(false);
      }
    const json& reps = array_at(doc, "representations", "$");
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const std::string p = "$.representations[" + std::to_string(k) + "]";
      Representation r = representation_from_json(reps[k], f, p);
      const std::size_t pos = size_at(reps[k], "position", p);
      if (pos >= xs.size() || !(xs[pos] == r.x)) {
        why = p + " is not for generator " + std::to_string(pos);
        return result(false);
      }
      if (!check_representation(T, r, &why)) {
        why = p + ": " + why;
        return result(false);
      }
    }
    IndependenceReport ir = independence_from_json(at(doc, "independence", "$"), f, "$.independence");
    if (ir.generators != basis) {
      why = "independence report is for another set";
      return result(false);
    }
    if (!check_independence(T, ir, &why)) return result(false);
    return result(true);
  }
  if (out.kind == "bound") {
    BoundReport r;
    r.basis_l = finsupp_list_from_json(at(doc, "basis_l", "$"), f, "$.basis_l");
    r.basis_b = finsupp_list_from_json(at(doc, "basis_b", "$"), f, "$.basis_b");
    r.representations = rep_list_from_json(at(doc, "representations", "$"), f, "$.representations");
    r.images = image_list_from_json(at(doc, "j_images", "$"), f, "$.j_images");
    r.delta_plus = degree_from_json(at(doc, "delta_plus", "$"), "$.delta_plus");
    r.delta_minus = degree_from_json(at(doc, "delta_minus", "$"), "$.delta_minus");
    r.attaining = finsupp_from_json(at(doc, "attaining", "$"), f, "$.attaining");
    r.m = at(doc, "m", "$").get<long>();
    r.degree_cap = size_at(doc, "degree_cap", "$");
    if (!check_bound_report(T, r, &why)) return result(false);
    if (doc.contains("no_torsion")) {
      NoTorsionReport nt = no_torsion_from_json(doc["no_torsion"], f, "$.no_torsion");
      if (nt.generators != r.basis_l) {
        why = "no-torsion report covers another space";
        return result(false);
      }
      if (!check_no_torsion(T, nt, &why)) return result(false);
    }
    return result(true);
  }
  if (out.kind == "witness") {
    Witness w{finsupp_from_json(at(doc, "u", "$"), f, "$.u"), poly_from_json(at(doc, "poly", "$"), f, "$.poly"),
              cylinder_from_json(at(doc, "source", "$"), f, "$.source"),
              cylinder_from_json(at(doc, "target", "$"), f, "$.target")};
    return result(check_witness(T, w, &why));
  }
  if (out.kind == "infeasible") {
    Infeasible w{poly_from_json(at(doc, "poly", "$"), f, "$.poly"),
                 cylinder_from_json(at(doc, "source", "$"), f, "$.source"),
                 cylinder_from_json(at(doc, "target", "$"), f, "$.target"),
                 Inconsistency{finsupp_from_json(at(doc, "lambda", "$"), f, "$.lambda")}};
    return result(check_infeasible(T, w, &why));
  }
  if (out.kind == "schedule") {
    VisitSchedule s;
    s.u = finsupp_from_json(at(doc, "u", "$"), f, "$.u");
    s.source = cylinder_from_json(at(doc, "source", "$"), f, "$.source");
    const json& visits = array_at(doc, "visits", "$");
    for (std::size_t k = 0; k < visits.size(); ++k) {
      const std::string p = "$.visits[" + std::to_string(k) + "]";
      s.visits.push_back(Visit{size_at(visits[k], "power", p), cylinder_from_json(at(visits[k], "target", p), f, p + ".target")});
    }
    return result(check_schedule(T, s, &why));
  }
  if (out.kind == "unknown") {
    out.ok = true;
    out.message = "UNKNOWN result carries no identities";
    return out;
  }
  throw ParseError("$.kind", "unknown certificate kind '" + out.kind + "'");
}

}  // namespace weakmix
