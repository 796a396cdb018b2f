#include "weakmix/structure.hpp"

#include "weakmix/error.hpp"

namespace weakmix {

bool RatFuncVec::is_zero() const {
  for (const auto& f : entries_)
    if (!f.is_zero()) return false;
  return true;
}

RatFuncVec& RatFuncVec::operator+=(const RatFuncVec& o) {
  if (o.size() != size()) throw std::invalid_argument("RatFuncVec size mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RatFuncVec& RatFuncVec::operator*=(const Scalar& s) {
  for (auto& f : entries_) f *= s;
  return *this;
}

std::string RatFuncVec::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].to_string();
  }
  return out + "]";
}

RatFuncVec m_apply(const RatFuncVec& v) {
  std::vector<RatFunc> out;
  out.reserve(v.size());
  for (const auto& f : v.entries()) out.push_back(m_apply(f));
  return RatFuncVec(std::move(out));
}

Representation representation_from_syzygy(const Syzygy& s, const FinSuppVec& x,
                                           const std::vector<FinSuppVec>& basis) {
  if (s.polys.size() != basis.size() + 1)
    throw std::invalid_argument("relation does not match [x] + basis");
  const Poly& q = s.polys[0];
  if (q.is_zero())
    throw DegenerateRelation("relation has zero coefficient on x; basis is dependent within the cap");
  const Scalar norm = -q.leading().inverse();
  Representation r{x, basis, q * -norm, {}};
  for (std::size_t a = 0; a < basis.size(); ++a) r.p.push_back(s.polys[a + 1] * norm);
  return r;
}

std::optional<Representation> represent(const OperatorSpec& T, const std::vector<FinSuppVec>& basis,
                                        const FinSuppVec& x, std::size_t degree_cap) {
  SearchGate::require("represent");
  for (const auto& b : basis)
    if (b.is_zero()) throw std::invalid_argument("basis contains the zero vector");
  const Field f = T.field();
  if (x.is_zero()) {
    return Representation{x, basis, Poly::one(f), std::vector<Poly>(basis.size(), Poly(f))};
  }
  std::vector<FinSuppVec> gens;
  gens.reserve(basis.size() + 1);
  gens.push_back(x);
  gens.insert(gens.end(), basis.begin(), basis.end());
  auto rel = find_relation(T, gens, degree_cap);
  if (!rel) return std::nullopt;
  return representation_from_syzygy(*rel, x, basis);
}

RatFuncVec j_image(const Representation& r) {
  std::vector<RatFunc> out;
  out.reserve(r.p.size());
  for (const auto& p : r.p) out.emplace_back(p, r.q);
  return RatFuncVec(std::move(out));
}

std::optional<RatFuncVec> j_map(const OperatorSpec& T, const std::vector<FinSuppVec>& basis,
                                const FinSuppVec& x, std::size_t degree_cap) {
  auto r = represent(T, basis, x, degree_cap);
  if (!r) return std::nullopt;
  return j_image(*r);
}

bool check_representation(const OperatorSpec& T, const Representation& r, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (r.p.size() != r.basis.size()) return fail("basis and coefficient counts differ");
  if (!r.q.is_monic()) return fail("q is not monic");
  FinSuppVec lhs = poly_dual_apply(T, r.q, r.x);
  for (std::size_t a = 0; a < r.basis.size(); ++a) lhs -= poly_dual_apply(T, r.p[a], r.basis[a]);
  if (!lhs.is_zero()) return fail("q(T')x - sum p_a(T')a = " + lhs.to_string());
  return true;
}

std::optional<bool> verify_intertwine(const OperatorSpec& T, const std::vector<FinSuppVec>& basis,
                                      const FinSuppVec& x, std::size_t degree_cap) {
  auto jx = j_map(T, basis, x, degree_cap);
  if (!jx) return std::nullopt;
  auto jtx = j_map(T, basis, dual_apply(T, x), degree_cap);
  if (!jtx) return std::nullopt;
  return *jtx == m_apply(*jx);
}

std::optional<bool> linearity_check(const OperatorSpec& T, const std::vector<FinSuppVec>& basis,
                                    const FinSuppVec& x, const FinSuppVec& y, const Scalar& alpha,
                                    const Scalar& beta, std::size_t degree_cap) {
  auto jx = j_map(T, basis, x, degree_cap);
  auto jy = j_map(T, basis, y, degree_cap);
  auto jz = j_map(T, basis, alpha * x + beta * y, degree_cap);
  if (!jx || !jy || !jz) return std::nullopt;
  return *jz == alpha * *jx + beta * *jy;
}

}  // namespace weakmix
