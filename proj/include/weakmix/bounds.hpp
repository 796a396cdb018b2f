#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "weakmix/torsion.hpp"

namespace weakmix {

/// All J-images are zero (or every combination vanishes): the space has
/// torsion and no grading bound exists.
class EmptySpace : public std::runtime_error {
public:
  explicit EmptySpace(const std::string& what) : std::runtime_error(what) {}
};

/// Maximal entry degree; -inf for the zero vector.
GradedDegree delta(const RatFuncVec& v);

struct DeltaBounds {
  GradedDegree plus;
  GradedDegree minus;
  /// Coefficients over the images (1-based) of a combination whose delta
  /// equals `minus`.
  FinSuppVec attaining;
  /// Dimension of the combinations that vanish identically.
  std::size_t vanishing_dim = 0;
};

/// plus = max delta over the images; minus = least delta over nonzero
/// K-combinations, found by clearing a common monic denominator Q and
/// probing d' = 0, 1, ... for a nonzero combination whose cleared entries
/// have degree <= d'. Then minus = d'_min - deg Q.
DeltaBounds delta_bounds(const std::vector<RatFuncVec>& images);

struct BoundReport {
  std::vector<FinSuppVec> basis_l;
  std::vector<FinSuppVec> basis_b;
  std::vector<Representation> representations;  // one per element of basis_l
  std::vector<RatFuncVec> images;
  GradedDegree delta_plus;
  GradedDegree delta_minus;
  FinSuppVec attaining;
  long m = 0;
  std::size_t degree_cap = 0;
};

using BoundResult = std::variant<BoundReport, TorsionCertificate, Unknown>;

/// m(L) = delta_plus - delta_minus + 1; p(T')(L) meets L only in 0 when
/// deg p >= m. Returns the torsion certificate instead when L has torsion.
BoundResult m_of_l(const OperatorSpec& T, const std::vector<FinSuppVec>& basis, std::size_t degree_cap);

/// Same bound computed over a caller-chosen T'-independent set B with
/// L inside F(B).
std::variant<BoundReport, Unknown> m_of_l_with_basis(const OperatorSpec& T,
                                                     const std::vector<FinSuppVec>& basis_l,
                                                     const std::vector<FinSuppVec>& basis_b,
                                                     std::size_t degree_cap);

/// Basis of p(T')(L) intersected with L, by direct elimination.
std::vector<FinSuppVec> brute_intersection(const OperatorSpec& T, const std::vector<FinSuppVec>& basis,
                                           const Poly& p);

/// Recomputes the images from the representations and the bounds from the
/// images; no search.
bool check_bound_report(const OperatorSpec& T, const BoundReport& r, std::string* why = nullptr);

}  // namespace weakmix
