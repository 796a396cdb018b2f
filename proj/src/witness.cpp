#include "weakmix/witness.hpp"

namespace weakmix {

bool AffineCylinder::contains(const FinSuppVec& u) const {
  for (const auto& c : constraints)
    if (!(pairing(c.functional, u) == c.value)) return false;
  return true;
}

std::vector<FinSuppVec> AffineCylinder::functionals() const {
  std::vector<FinSuppVec> out;
  for (const auto& c : constraints) out.push_back(c.functional);
  return out;
}

std::vector<Scalar> AffineCylinder::values() const {
  std::vector<Scalar> out;
  for (const auto& c : constraints) out.push_back(c.value);
  return out;
}

namespace {

struct System {
  std::vector<FinSuppVec> functionals;
  std::vector<Scalar> values;
};

System witness_system(const OperatorSpec& T, const AffineCylinder& source, const AffineCylinder& target,
                      const Poly& p) {
  System s{source.functionals(), source.values()};
  for (const auto& c : target.constraints) {
    s.functionals.push_back(poly_dual_apply(T, p, c.functional));
    s.values.push_back(c.value);
  }
  return s;
}

std::vector<FinSuppVec> all_functionals(const AffineCylinder& source,
                                        const std::vector<AffineCylinder>& targets) {
  std::vector<FinSuppVec> out = source.functionals();
  for (const auto& t : targets)
    for (const auto& c : t.constraints) out.push_back(c.functional);
  return out;
}

}  // namespace

WitnessResult witness(const OperatorSpec& T, const AffineCylinder& source, const AffineCylinder& target,
                      const Poly& p) {
  System sys = witness_system(T, source, target, p);
  auto solved = solve_functionals(sys.functionals, sys.values);
  if (auto* bad = std::get_if<Inconsistency>(&solved)) return Infeasible{p, source, target, std::move(*bad)};
  Witness w{std::get<FinSuppVec>(std::move(solved)), p, source, target};
  if (!check_witness(T, w)) throw std::logic_error("witness failed verification");
  return w;
}

std::variant<Threshold, TorsionCertificate, Unknown> mixing_threshold(const OperatorSpec& T,
                                                                      const AffineCylinder& source,
                                                                      const AffineCylinder& target,
                                                                      std::size_t degree_cap) {
  auto r = m_of_l(T, all_functionals(source, {target}), degree_cap);
  if (auto* c = std::get_if<TorsionCertificate>(&r)) return std::move(*c);
  if (auto* u = std::get_if<Unknown>(&r)) return std::move(*u);
  auto& report = std::get<BoundReport>(r);
  const long k = report.m;
  return Threshold{k, std::move(report)};
}

std::variant<VisitSchedule, Unknown> schedule_orbit(const OperatorSpec& T, const AffineCylinder& source,
                                                    const std::vector<AffineCylinder>& targets,
                                                    std::size_t degree_cap) {
  SearchGate::require("schedule_orbit");
  const Field f = T.field();
  if (targets.empty()) return Unknown{"no targets"};
  std::size_t budget = 0;
  {
    auto bound = m_of_l(T, all_functionals(source, targets), degree_cap);
    if (std::holds_alternative<TorsionCertificate>(bound))
      return Unknown{"the constraint span contains a torsion functional"};
    if (auto* u = std::get_if<Unknown>(&bound)) return Unknown{"step budget: " + u->reason};
    budget = static_cast<std::size_t>(std::get<BoundReport>(bound).m) + 8;
  }

  Echelon stacked(f);
  System sys{source.functionals(), source.values()};
  for (const auto& h : sys.functionals)
    if (stacked.insert(h)) return Unknown{"source constraints are linearly dependent"};

  VisitSchedule s{FinSuppVec(f), source, {}};
  std::size_t prev = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    std::vector<FinSuppVec> images;
    for (const auto& c : targets[i].constraints) images.push_back(dual_power(T, prev, c.functional));
    bool placed = false;
    for (std::size_t n = prev + 1; n <= prev + budget; ++n) {
      for (auto& v : images) v = dual_apply(T, v);
      Echelon trial = stacked;
      bool independent = true;
      for (const auto& v : images)
        if (trial.insert(v)) {
          independent = false;
          break;
        }
      if (!independent) continue;
      stacked = std::move(trial);
      for (std::size_t j = 0; j < images.size(); ++j) {
        sys.functionals.push_back(images[j]);
        sys.values.push_back(targets[i].constraints[j].value);
      }
      s.visits.push_back(Visit{n, targets[i]});
      prev = n;
      placed = true;
      break;
    }
    if (!placed)
      return Unknown{"step budget " + std::to_string(budget) + " exhausted at target " + std::to_string(i)};
  }

  auto solved = solve_functionals(sys.functionals, sys.values);
  if (std::holds_alternative<Inconsistency>(solved))
    throw std::logic_error("independent stacked system reported inconsistent");
  s.u = std::get<FinSuppVec>(std::move(solved));
  if (!check_schedule(T, s)) throw std::logic_error("schedule failed verification");
  return s;
}

bool verify_visit(const OperatorSpec& T, const FinSuppVec& u, std::size_t n, const AffineCylinder& target) {
  for (const auto& c : target.constraints)
    if (!(pairing(dual_power(T, n, c.functional), u) == c.value)) return false;
  return true;
}

bool check_witness(const OperatorSpec& T, const Witness& w, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  for (std::size_t k = 0; k < w.source.constraints.size(); ++k) {
    const auto& c = w.source.constraints[k];
    Scalar r = pairing(c.functional, w.u) - c.value;
    if (!r.is_zero()) return fail("source constraint " + std::to_string(k) + " residual " + r.to_string());
  }
  for (std::size_t j = 0; j < w.target.constraints.size(); ++j) {
    const auto& c = w.target.constraints[j];
    Scalar r = pairing(poly_dual_apply(T, w.poly, c.functional), w.u) - c.value;
    if (!r.is_zero()) return fail("target constraint " + std::to_string(j) + " residual " + r.to_string());
  }
  return true;
}

bool check_infeasible(const OperatorSpec& T, const Infeasible& w, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  System sys = witness_system(T, w.source, w.target, w.poly);
  FinSuppVec combo(T.field());
  Scalar rhs = Scalar::zero(T.field());
  for (const auto& [id, lambda] : w.proof.lambda) {
    if (id < 1 || id > sys.functionals.size()) return fail("combination index out of range");
    combo.axpy(lambda, sys.functionals[id - 1]);
    rhs += lambda * sys.values[id - 1];
  }
  if (!combo.is_zero()) return fail("combination of functionals is " + combo.to_string() + ", not zero");
  if (rhs.is_zero()) return fail("combination of values is zero; system may be consistent");
  return true;
}

bool check_schedule(const OperatorSpec& T, const VisitSchedule& s, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (!s.source.contains(s.u)) return fail("u is not in the source cylinder");
  std::size_t prev = 0;
  for (std::size_t i = 0; i < s.visits.size(); ++i) {
    const auto& v = s.visits[i];
    if (v.power <= prev) return fail("powers are not strictly increasing at visit " + std::to_string(i));
    prev = v.power;
    if (!verify_visit(T, s.u, v.power, v.target)) return fail("visit " + std::to_string(i) + " misses its target");
  }
  return true;
}

}  // namespace weakmix
