#include "weakmix/bounds.hpp"

#include <algorithm>

#include "weakmix/echelon.hpp"

namespace weakmix {

GradedDegree delta(const RatFuncVec& v) {
  GradedDegree d = GradedDegree::neg_inf();
  for (const auto& f : v.entries()) d = max(d, f.degree());
  return d;
}

namespace {

// Cleared polynomial entries Q * v[a] for every image.
std::vector<std::vector<Poly>> clear(const std::vector<RatFuncVec>& images, const Poly& Q) {
  std::vector<std::vector<Poly>> out;
  for (const auto& v : images) {
    std::vector<Poly> row;
    for (const auto& f : v.entries()) row.push_back(f.num() * exact_div(Q, f.den()));
    out.push_back(std::move(row));
  }
  return out;
}

// Columns of coefficients of degree > cut (all coefficients when cut < 0).
std::vector<FinSuppVec> high_columns(const std::vector<std::vector<Poly>>& cleared, long cut,
                                     std::size_t stride, Field f) {
  std::vector<FinSuppVec> cols;
  for (const auto& row : cleared) {
    std::vector<FinSuppVec::Entry> e;
    for (std::size_t a = 0; a < row.size(); ++a)
      for (std::size_t k = 0; k < row[a].size(); ++k)
        if (static_cast<long>(k) > cut) e.emplace_back(a * stride + k + 1, row[a].coeffs()[k]);
    cols.emplace_back(f, std::move(e));
  }
  return cols;
}

RatFuncVec combine(const std::vector<RatFuncVec>& images, const FinSuppVec& c) {
  RatFuncVec out(images.front()[0].field(), images.front().size());
  for (const auto& [id, s] : c) out += s * images[id - 1];
  return out;
}

}  // namespace

DeltaBounds delta_bounds(const std::vector<RatFuncVec>& images) {
  if (images.empty()) throw EmptySpace("no images");
  const std::size_t width = images.front().size();
  for (const auto& v : images)
    if (v.size() != width) throw std::invalid_argument("images have different lengths");
  if (width == 0) throw EmptySpace("images are empty vectors");
  const Field f = images.front()[0].field();

  DeltaBounds b{GradedDegree::neg_inf(), GradedDegree::neg_inf(), FinSuppVec(f)};
  for (const auto& v : images) b.plus = max(b.plus, delta(v));
  if (b.plus.is_neg_inf()) throw EmptySpace("all images are zero");

  Poly Q = Poly::one(f);
  for (const auto& v : images)
    for (const auto& e : v.entries()) Q = lcm(Q, e.den());
  const auto cleared = clear(images, Q);
  std::size_t stride = 1;
  long top = 0;
  for (const auto& row : cleared)
    for (const auto& p : row) {
      stride = std::max(stride, p.size());
      if (!p.is_zero()) top = std::max(top, p.degree().value());
    }

  // Combinations that vanish identically do not count.
  const auto vanishing = kernel_basis(f, high_columns(cleared, -1, stride, f));
  Echelon zero_space(f);
  for (const auto& k : vanishing) zero_space.insert(k);
  b.vanishing_dim = vanishing.size();

  for (long cut = 0; cut <= top; ++cut) {
    for (const auto& c : kernel_basis(f, high_columns(cleared, cut, stride, f))) {
      if (zero_space.contains(c)) continue;
      b.minus = GradedDegree(cut) - Q.degree().value();
      b.attaining = c;
      return b;
    }
  }
  throw std::logic_error("no nonzero combination found up to the top degree");
}

namespace {

std::variant<BoundReport, Unknown> finish_report(std::vector<FinSuppVec> basis_l,
                                                 std::vector<FinSuppVec> basis_b,
                                                 std::vector<Representation> reps,
                                                 std::size_t degree_cap) {
  BoundReport r;
  r.basis_l = std::move(basis_l);
  r.basis_b = std::move(basis_b);
  r.representations = std::move(reps);
  r.degree_cap = degree_cap;
  for (const auto& rep : r.representations) r.images.push_back(j_image(rep));
  DeltaBounds b;
  try {
    b = delta_bounds(r.images);
  } catch (const EmptySpace& e) {
    return Unknown{std::string("grading bound undefined: ") + e.what()};
  }
  if (b.vanishing_dim > 0) return Unknown{"J-images are linearly dependent: L has torsion"};
  r.delta_plus = b.plus;
  r.delta_minus = b.minus;
  r.attaining = std::move(b.attaining);
  r.m = r.delta_plus.value() - r.delta_minus.value() + 1;
  return r;
}

}  // namespace

BoundResult m_of_l(const OperatorSpec& T, const std::vector<FinSuppVec>& basis, std::size_t degree_cap) {
  auto t = torsion_in_span(T, basis, degree_cap);
  if (auto* c = std::get_if<TorsionCertificate>(&t)) return std::move(*c);
  if (auto* u = std::get_if<Unknown>(&t)) return std::move(*u);
  auto& nt = std::get<NoTorsionReport>(t);
  auto r = finish_report(nt.generators, nt.basis, nt.representations, degree_cap);
  if (auto* u = std::get_if<Unknown>(&r)) return std::move(*u);
  return std::get<BoundReport>(std::move(r));
}

std::variant<BoundReport, Unknown> m_of_l_with_basis(const OperatorSpec& T,
                                                     const std::vector<FinSuppVec>& basis_l,
                                                     const std::vector<FinSuppVec>& basis_b,
                                                     std::size_t degree_cap) {
  if (find_relation(T, basis_b, degree_cap))
    return Unknown{"the chosen basis is T'-dependent within the cap"};
  std::vector<Representation> reps;
  for (const auto& x : basis_l) {
    auto rep = represent(T, basis_b, x, degree_cap);
    if (!rep) return Unknown{"vector " + x.to_string() + " not representable within the cap"};
    reps.push_back(std::move(*rep));
  }
  return finish_report(basis_l, basis_b, std::move(reps), degree_cap);
}

std::vector<FinSuppVec> brute_intersection(const OperatorSpec& T, const std::vector<FinSuppVec>& basis,
                                           const Poly& p) {
  const Field f = T.field();
  const std::size_t r = basis.size();
  std::vector<FinSuppVec> columns;
  std::vector<FinSuppVec> images;
  for (const auto& b : basis) images.push_back(poly_dual_apply(T, p, b));
  columns = images;
  columns.insert(columns.end(), basis.begin(), basis.end());
  std::vector<FinSuppVec> candidates;
  for (const auto& k : kernel_basis(f, columns)) {
    FinSuppVec v(f);
    for (const auto& [id, c] : k)
      if (id <= r) v.axpy(c, images[id - 1]);
    if (!v.is_zero()) candidates.push_back(std::move(v));
  }
  std::vector<FinSuppVec> out;
  for (std::size_t i : independent_subset(f, candidates))
    out.push_back(candidates[i].first_value().inverse() * candidates[i]);
  return out;
}

bool check_bound_report(const OperatorSpec& T, const BoundReport& r, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const Field f = T.field();
  if (r.basis_l.empty()) return fail("empty basis of L");
  if (rank_of(f, r.basis_l) != r.basis_l.size()) return fail("basis of L is linearly dependent");
  if (r.representations.size() != r.basis_l.size() || r.images.size() != r.basis_l.size())
    return fail("one representation and image per basis vector required");
  for (std::size_t j = 0; j < r.basis_l.size(); ++j) {
    const auto& rep = r.representations[j];
    if (!(rep.x == r.basis_l[j]) || rep.basis != r.basis_b)
      return fail("representation " + std::to_string(j) + " does not match the report");
    std::string sub;
    if (!check_representation(T, rep, &sub)) return fail("representation " + std::to_string(j) + ": " + sub);
    if (!(j_image(rep) == r.images[j])) return fail("J-image " + std::to_string(j) + " does not match");
  }
  DeltaBounds b;
  try {
    b = delta_bounds(r.images);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (b.vanishing_dim > 0) return fail("J-images are linearly dependent");
  if (b.plus != r.delta_plus) return fail("delta_plus is " + b.plus.to_string());
  if (b.minus != r.delta_minus) return fail("delta_minus is " + b.minus.to_string());
  if (r.attaining.is_zero() || delta(combine(r.images, r.attaining)) != r.delta_minus)
    return fail("attaining combination does not reach delta_minus");
  if (r.m != r.delta_plus.value() - r.delta_minus.value() + 1) return fail("m != delta_plus - delta_minus + 1");
  return true;
}

}  // namespace weakmix
