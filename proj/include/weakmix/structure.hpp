#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weakmix/ratfunc.hpp"
#include "weakmix/relations.hpp"

namespace weakmix {

/// A relation whose coefficient on the represented vector vanished, which
/// means the basis itself was dependent within the cap.
class DegenerateRelation : public std::runtime_error {
public:
  explicit DegenerateRelation(const std::string& what) : std::runtime_error(what) {}
};

/// q(T')x = sum_a p_a(T') a with q monic.
struct Representation {
  FinSuppVec x;
  std::vector<FinSuppVec> basis;
  Poly q;
  std::vector<Poly> p;
};

/// Element of the direct sum of copies of K(t), one slot per basis vector.
class RatFuncVec {
public:
  RatFuncVec() = default;
  RatFuncVec(Field field, std::size_t size) : entries_(size, RatFunc(field)) {}
  explicit RatFuncVec(std::vector<RatFunc> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  const RatFunc& operator[](std::size_t i) const { return entries_[i]; }
  RatFunc& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<RatFunc>& entries() const noexcept { return entries_; }
  bool is_zero() const;

  RatFuncVec& operator+=(const RatFuncVec& o);
  RatFuncVec& operator*=(const Scalar& s);
  friend RatFuncVec operator+(RatFuncVec a, const RatFuncVec& b) { return a += b; }
  friend RatFuncVec operator*(const Scalar& s, RatFuncVec a) { return a *= s; }
  friend bool operator==(const RatFuncVec& a, const RatFuncVec& b) = default;

  std::string to_string() const;

private:
  std::vector<RatFunc> entries_;
};

/// Entrywise multiplication by t.
RatFuncVec m_apply(const RatFuncVec& v);

/// Builds a normalized representation of x from a relation among
/// [x] followed by the basis. Throws DegenerateRelation when the relation
/// does not involve x.
Representation representation_from_syzygy(const Syzygy& s, const FinSuppVec& x,
                                           const std::vector<FinSuppVec>& basis);

/// Searches for q(T')x = sum p_a(T')a with all degrees <= degree_cap.
/// std::nullopt when x is not shown to lie in F(B) at this cap. The basis
/// must consist of nonzero vectors.
std::optional<Representation> represent(const OperatorSpec& T, const std::vector<FinSuppVec>& basis,
                                        const FinSuppVec& x, std::size_t degree_cap);

/// The coordinates f_{x,a} = p_a / q.
RatFuncVec j_image(const Representation& r);

/// j_image of represent(...); std::nullopt when represent fails.
std::optional<RatFuncVec> j_map(const OperatorSpec& T, const std::vector<FinSuppVec>& basis,
                                const FinSuppVec& x, std::size_t degree_cap);

bool check_representation(const OperatorSpec& T, const Representation& r,
                          std::string* why = nullptr);

/// J(T'x) == M J(x). std::nullopt when either side is not representable.
std::optional<bool> verify_intertwine(const OperatorSpec& T, const std::vector<FinSuppVec>& basis,
                                      const FinSuppVec& x, std::size_t degree_cap);

/// J(alpha x + beta y) == alpha J(x) + beta J(y).
std::optional<bool> linearity_check(const OperatorSpec& T, const std::vector<FinSuppVec>& basis,
                                    const FinSuppVec& x, const FinSuppVec& y, const Scalar& alpha,
                                    const Scalar& beta, std::size_t degree_cap);

}  // namespace weakmix
