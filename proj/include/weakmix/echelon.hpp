#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "weakmix/finsupp.hpp"

namespace weakmix {

/// Incremental row echelon form over sparse vectors.
///
/// Vectors are inserted one at a time and receive consecutive ids starting
/// at 1. Every stored row r has leading coefficient 1 at its pivot (the
/// smallest index of its support) and carries a combination c over ids
/// with r = sum_id c_id * v_id. An inserted vector that reduces to zero is
/// reported together with the relation that witnesses the dependency; the
/// relation has coefficient 1 on the new id. Pivoting is fixed (smallest
/// index first), so results are deterministic.
class Echelon {
public:
  struct Row {
    FinSuppVec vec;
    FinSuppVec combo;
  };

  explicit Echelon(Field field) : field_(field) {}

  Field field() const noexcept { return field_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t inserted() const noexcept { return count_; }
  const std::map<Index, Row>& rows() const noexcept { return rows_; }
  /// Pivot created by the most recent independent insertion.
  Index last_pivot() const noexcept { return last_pivot_; }

  /// Inserts v. Returns the relation over ids if v is in the span of the
  /// vectors inserted before it, otherwise std::nullopt.
  std::optional<FinSuppVec> insert(const FinSuppVec& v);

  /// Reports the insertion outcome without modifying the basis.
  bool would_be_independent(const FinSuppVec& v) const;

  /// Coordinates of v over the inserted ids when v lies in their span.
  std::optional<FinSuppVec> coordinates(const FinSuppVec& v) const;

  bool contains(const FinSuppVec& v) const { return coordinates(v).has_value(); }

private:
  Field field_;
  std::size_t count_ = 0;
  Index last_pivot_ = 0;
  std::map<Index, Row> rows_;
};

/// Basis of the kernel of the linear map c -> sum_j c_j columns[j].
/// Kernel vectors are indexed by column position + 1; each has
/// coefficient 1 at its largest index.
std::vector<FinSuppVec> kernel_basis(Field field, const std::vector<FinSuppVec>& columns);

/// Indices (0-based) of the greedily chosen linearly independent subset.
std::vector<std::size_t> independent_subset(Field field, const std::vector<FinSuppVec>& vs);

std::size_t rank_of(Field field, const std::vector<FinSuppVec>& vs);

/// Proof that the system h_i(u) = c_i has no solution: a combination with
/// sum lambda_i h_i = 0 but sum lambda_i c_i != 0. Ids are 1-based.
struct Inconsistency {
  FinSuppVec lambda;
};

/// Solves h_i(u) = c_i for a finitely supported u. Free coordinates are set
/// to zero, so the support of u lies in the union support of the h_i.
std::variant<FinSuppVec, Inconsistency> solve_functionals(const std::vector<FinSuppVec>& functionals,
                                                          const std::vector<Scalar>& values);

}  // namespace weakmix
