#include "weakmix/torsion.hpp"

#include <algorithm>

#include "weakmix/echelon.hpp"
#include "weakmix/error.hpp"

namespace weakmix {

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::NotTransitive: return "NOT_TRANSITIVE";
    case Verdict::MixingCertifiedUpTo: return "MIXING_CERTIFIED_UP_TO";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

GreedyResult greedy_independent_subset(const OperatorSpec& T, const std::vector<FinSuppVec>& xs,
                                       std::size_t degree_cap) {
  SearchGate::require("greedy_independent_subset");
  GreedyResult g;
  g.degree_cap = degree_cap;
  const Field f = T.field();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const FinSuppVec& x = xs[i];
    if (x.is_zero()) {
      g.representations.emplace(
          i, Representation{x, g.basis, Poly::one(f), std::vector<Poly>(g.basis.size(), Poly(f))});
      continue;
    }
    std::vector<FinSuppVec> gens{x};
    gens.insert(gens.end(), g.basis.begin(), g.basis.end());
    auto rel = find_relation(T, gens, degree_cap);
    if (!rel) {
      g.kept.push_back(i);
      g.basis.push_back(x);
      continue;
    }
    g.representations.emplace(i, representation_from_syzygy(*rel, x, g.basis));
  }
  return g;
}

TorsionCertificate torsion_certificate_for(const OperatorSpec& T, const FinSuppVec& x,
                                           std::size_t bound) {
  auto rel = find_relation(T, {x}, bound);
  if (!rel) throw std::logic_error("expected an annihilator within the bound");
  TorsionCertificate c{x, rel->polys[0], {}};
  const auto k = static_cast<std::size_t>(c.annihilator.degree().value());
  FinSuppVec v = x;
  for (std::size_t i = 0; i < k; ++i) {
    c.invariant_basis.push_back(v);
    v = dual_apply(T, v);
  }
  return c;
}

std::vector<std::vector<Poly>> cleared_numerators(const std::vector<Representation>& reps,
                                                  const Poly& common_denominator) {
  std::vector<std::vector<Poly>> out;
  out.reserve(reps.size());
  for (const auto& r : reps) {
    const Poly cofactor = exact_div(common_denominator, r.q);
    std::vector<Poly> row;
    row.reserve(r.p.size());
    for (const auto& p : r.p) row.push_back(p * cofactor);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<FinSuppVec> coefficient_columns(const std::vector<std::vector<Poly>>& numerators,
                                            Field field) {
  std::size_t stride = 1;
  for (const auto& row : numerators)
    for (const auto& p : row) stride = std::max(stride, p.size());
  std::vector<FinSuppVec> cols;
  cols.reserve(numerators.size());
  for (const auto& row : numerators) {
    std::vector<FinSuppVec::Entry> e;
    for (std::size_t a = 0; a < row.size(); ++a)
      for (std::size_t k = 0; k < row[a].size(); ++k)
        e.emplace_back(a * stride + k + 1, row[a].coeffs()[k]);
    cols.emplace_back(field, std::move(e));
  }
  return cols;
}

namespace {

long max_numerator_degree(const std::vector<std::vector<Poly>>& numerators) {
  long d = 0;
  for (const auto& row : numerators)
    for (const auto& p : row)
      if (!p.is_zero()) d = std::max(d, p.degree().value());
  return d;
}

std::size_t required_independence_cap(std::size_t degree_cap, const Poly& Q,
                                      const std::vector<std::vector<Poly>>& numerators) {
  const auto dq = static_cast<std::size_t>(Q.degree().value());
  return std::max(degree_cap, dq) + static_cast<std::size_t>(max_numerator_degree(numerators));
}

}  // namespace

TorsionResult torsion_in_span(const OperatorSpec& T, const std::vector<FinSuppVec>& xs,
                              std::size_t degree_cap) {
  SearchGate::require("torsion_in_span");
  const Field f = T.field();
  std::vector<FinSuppVec> gens;
  for (std::size_t i : independent_subset(f, xs)) gens.push_back(xs[i]);
  if (gens.empty()) return Unknown{"the span is zero"};

  GreedyResult g;
  try {
    g = greedy_independent_subset(T, gens, degree_cap);
  } catch (const DegenerateRelation& e) {
    return Unknown{e.what()};
  }

  const std::size_t nb = g.basis.size();
  std::vector<Representation> reps;
  std::size_t next_kept = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (next_kept < g.kept.size() && g.kept[next_kept] == i) {
      std::vector<Poly> p(nb, Poly(f));
      p[next_kept] = Poly::one(f);
      reps.push_back(Representation{gens[i], g.basis, Poly::one(f), std::move(p)});
      ++next_kept;
      continue;
    }
    Representation r = g.representations.at(i);
    r.basis = g.basis;
    r.p.resize(nb, Poly(f));
    reps.push_back(std::move(r));
  }

  Poly Q = Poly::one(f);
  for (const auto& r : reps) Q = lcm(Q, r.q);
  const auto numerators = cleared_numerators(reps, Q);
  const auto kernel = kernel_basis(f, coefficient_columns(numerators, f));

  if (!kernel.empty()) {
    FinSuppVec x(f);
    for (const auto& [id, c] : kernel.front()) x.axpy(c, gens[id - 1]);
    if (!poly_dual_apply(T, Q, x).is_zero())
      throw std::logic_error("common denominator does not annihilate the kernel functional");
    auto cert = torsion_certificate_for(T, x, static_cast<std::size_t>(Q.degree().value()));
    if (!check_torsion(T, cert)) throw std::logic_error("torsion certificate failed verification");
    return cert;
  }

  const std::size_t needed = required_independence_cap(degree_cap, Q, numerators);
  auto indep = search_relation(T, g.basis, needed);
  if (std::holds_alternative<Syzygy>(indep))
    return Unknown{"independent set became dependent at escalated degree " + std::to_string(needed)};
  return NoTorsionReport{gens, g.basis, std::move(reps), Q, degree_cap,
                         std::get<IndependenceReport>(std::move(indep))};
}

ClassifyVerdict classify(const OperatorSpec& T, std::size_t support_cap, std::size_t degree_cap) {
  ClassifyVerdict v;
  v.support_cap = support_cap;
  v.degree_cap = degree_cap;
  if (support_cap < 1 || degree_cap < 1) {
    v.reason = "caps must be at least 1 (support " + std::to_string(support_cap) + ", degree " +
               std::to_string(degree_cap) + ")";
    return v;
  }
  std::vector<FinSuppVec> gens;
  for (Index s = 1; s <= support_cap; ++s) {
    gens.push_back(FinSuppVec::unit(T.field(), s));
    auto r = torsion_in_span(T, gens, degree_cap);
    if (auto* t = std::get_if<TorsionCertificate>(&r)) {
      v.verdict = Verdict::NotTransitive;
      v.torsion = std::move(*t);
      return v;
    }
    if (auto* u = std::get_if<Unknown>(&r)) {
      v.reason = "support " + std::to_string(s) + ": " + u->reason;
      return v;
    }
    v.no_torsion = std::get<NoTorsionReport>(std::move(r));
  }
  v.verdict = Verdict::MixingCertifiedUpTo;
  return v;
}

bool check_torsion(const OperatorSpec& T, const TorsionCertificate& c, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const Field f = T.field();
  if (c.x.is_zero()) return fail("torsion functional is zero");
  if (c.annihilator.is_zero()) return fail("annihilator is zero");
  FinSuppVec killed = poly_dual_apply(T, c.annihilator, c.x);
  if (!killed.is_zero()) return fail("annihilator(T')x = " + killed.to_string() + " is not zero");
  const auto k = static_cast<std::size_t>(c.annihilator.degree().value());
  if (c.invariant_basis.empty() || c.invariant_basis.size() > k)
    return fail("invariant basis must have between 1 and deg(annihilator) vectors");
  Echelon basis(f);
  for (const auto& b : c.invariant_basis)
    if (basis.insert(b)) return fail("invariant basis is linearly dependent");
  // span{x, ..., T'^(k-1) x} must equal the span of the basis.
  std::vector<FinSuppVec> krylov;
  FinSuppVec v = c.x;
  for (std::size_t i = 0; i < k; ++i) {
    if (!basis.contains(v)) return fail("T'^" + std::to_string(i) + "x lies outside the invariant basis");
    krylov.push_back(v);
    v = dual_apply(T, v);
  }
  if (rank_of(f, krylov) != c.invariant_basis.size())
    return fail("invariant basis spans more than the Krylov space of x");
  for (std::size_t i = 0; i < c.invariant_basis.size(); ++i)
    if (!basis.contains(dual_apply(T, c.invariant_basis[i])))
      return fail("T' maps basis vector " + std::to_string(i) + " outside the span");
  return true;
}

bool check_no_torsion(const OperatorSpec& T, const NoTorsionReport& r, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const Field f = T.field();
  if (r.generators.empty()) return fail("no generators");
  for (const auto& g : r.generators)
    if (g.is_zero()) return fail("zero generator");
  if (rank_of(f, r.generators) != r.generators.size()) return fail("generators are linearly dependent");
  if (r.representations.size() != r.generators.size()) return fail("one representation per generator required");
  if (!r.common_denominator.is_monic()) return fail("common denominator is not monic");
  for (std::size_t j = 0; j < r.generators.size(); ++j) {
    const auto& rep = r.representations[j];
    if (!(rep.x == r.generators[j])) return fail("representation " + std::to_string(j) + " is for another vector");
    if (rep.basis != r.basis) return fail("representation " + std::to_string(j) + " uses another basis");
    std::string sub;
    if (!check_representation(T, rep, &sub)) return fail("representation " + std::to_string(j) + ": " + sub);
    if (!divmod(r.common_denominator, rep.q).remainder.is_zero())
      return fail("q_" + std::to_string(j) + " does not divide the common denominator");
  }
  const auto numerators = cleared_numerators(r.representations, r.common_denominator);
  if (!kernel_basis(f, coefficient_columns(numerators, f)).empty())
    return fail("J-images are linearly dependent: the span has torsion");
  if (r.independence.generators != r.basis) return fail("independence report is for another set");
  const std::size_t needed = required_independence_cap(r.degree_cap, r.common_denominator, numerators);
  if (r.independence.degree_cap < needed)
    return fail("basis certified only up to degree " + std::to_string(r.independence.degree_cap) +
                ", need " + std::to_string(needed));
  std::string sub;
  if (!check_independence(T, r.independence, &sub)) return fail("independence: " + sub);
  return true;
}

}  // namespace weakmix
