#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "weakmix/finsupp.hpp"
#include "weakmix/poly.hpp"

namespace weakmix {

/// Infinite sequence given by a finite head followed by a repeated period.
/// Entries are indexed from 1.
class PeriodicSeq {
public:
  /// Throws std::invalid_argument on an empty period or mixed fields.
  PeriodicSeq(std::vector<Scalar> head, std::vector<Scalar> period);

  static PeriodicSeq constant(const Scalar& c) { return PeriodicSeq({}, {c}); }

  Field field() const noexcept { return period_.front().field(); }
  const std::vector<Scalar>& head() const noexcept { return head_; }
  const std::vector<Scalar>& period() const noexcept { return period_; }

  /// Precondition: n >= 1.
  const Scalar& at(Index n) const;

private:
  std::vector<Scalar> head_;
  std::vector<Scalar> period_;
};

enum class OpKind {
  BackwardShift,
  ForwardShift,
  Diagonal,
  Banded,
  FiniteBlock,
  Sum,
  Scale,
  Compose,
  PolyOf,
  DirectSum,
};

const char* op_kind_name(OpKind k) noexcept;

class OperatorSpec;

struct Band {
  long offset;
  PeriodicSeq entries;
};

/// Node of an operator expression. Immutable apart from the row cache.
struct OperatorNode {
  OpKind kind;
  Field field;
  std::vector<PeriodicSeq> seq;             // shift weights or diagonal entries
  std::vector<Band> bands;                  // Banded
  std::vector<std::vector<Scalar>> matrix;  // FiniteBlock
  std::vector<Scalar> coeffs;               // Scale (one entry) and PolyOf
  std::vector<OperatorSpec> children;       // tail, terms, factors, parts

  mutable std::mutex cache_mutex;
  mutable std::unordered_map<Index, FinSuppVec> row_cache;
};

/// Row-finite operator on omega described by a finite expression tree.
/// Copies share the same immutable tree.
class OperatorSpec {
public:
  /// (Tx)_n = w_n x_{n+1}
  static OperatorSpec backward_shift(PeriodicSeq weights);
  /// (Tx)_1 = 0, (Tx)_{n+1} = w_n x_n
  static OperatorSpec forward_shift(PeriodicSeq weights);
  static OperatorSpec diagonal(PeriodicSeq entries);
  /// T[n, n+offset] = entries_n, dropped where n+offset < 1.
  static OperatorSpec banded(std::vector<Band> bands);
  /// Block diagonal: the k x k matrix on e_1..e_k, then `tail` shifted by k.
  static OperatorSpec finite_block(std::vector<std::vector<Scalar>> matrix, OperatorSpec tail);
  static OperatorSpec sum(std::vector<OperatorSpec> terms);
  static OperatorSpec scale(const Scalar& s, OperatorSpec op);
  /// factors[0] * factors[1] * ... (the last factor acts first).
  static OperatorSpec compose(std::vector<OperatorSpec> factors);
  /// sum_i coeffs[i] op^i
  static OperatorSpec poly_of(std::vector<Scalar> coeffs, OperatorSpec op);
  /// Part j (0-based) of r parts acts on the indices n with n = j+1 mod r.
  static OperatorSpec direct_sum(std::vector<OperatorSpec> parts);

  OpKind kind() const noexcept { return node_->kind; }
  Field field() const noexcept { return node_->field; }
  const OperatorNode& node() const noexcept { return *node_; }

  /// Row n (n >= 1) of the matrix of T.
  FinSuppVec row(Index n) const;

private:
  explicit OperatorSpec(std::shared_ptr<OperatorNode> node) : node_(std::move(node)) {}
  static std::shared_ptr<OperatorNode> make(OpKind kind, Field field);
  FinSuppVec compute_row(Index n) const;

  std::shared_ptr<const OperatorNode> node_;
};

/// T'f, i.e. (T'f)_n = sum_k f_k T[k,n]. Finite because T is row-finite.
FinSuppVec dual_apply(const OperatorSpec& T, const FinSuppVec& f);

/// p(T')f by Horner iteration of dual_apply.
FinSuppVec poly_dual_apply(const OperatorSpec& T, const Poly& p, const FinSuppVec& f);

/// (T')^n f
FinSuppVec dual_power(const OperatorSpec& T, std::size_t n, const FinSuppVec& f);

/// First `length` coordinates of Tu, computed row by row.
FinSuppVec apply_prefix(const OperatorSpec& T, const FinSuppVec& u, Index length);

/// Maps coordinate m of part j (0-based) of an r-part direct sum to its
/// global index (m-1)r + j + 1.
FinSuppVec embed_part(const FinSuppVec& f, std::size_t parts, std::size_t j);

}  // namespace weakmix
