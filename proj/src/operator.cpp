#include "weakmix/operator.hpp"

#include <stdexcept>

#include "weakmix/error.hpp"

namespace weakmix {

PeriodicSeq::PeriodicSeq(std::vector<Scalar> head, std::vector<Scalar> period)
    : head_(std::move(head)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("empty period");
  const Field f = period_.front().field();
  for (const auto& s : head_)
    if (s.field() != f) throw FieldMismatch("sequence entries from different fields");
  for (const auto& s : period_)
    if (s.field() != f) throw FieldMismatch("sequence entries from different fields");
}

const Scalar& PeriodicSeq::at(Index n) const {
  if (n == 0) throw std::out_of_range("sequence index starts at 1");
  if (n <= head_.size()) return head_[n - 1];
  return period_[(n - head_.size() - 1) % period_.size()];
}

const char* op_kind_name(OpKind k) noexcept {
  switch (k) {
    case OpKind::BackwardShift: return "backward_shift";
    case OpKind::ForwardShift: return "forward_shift";
    case OpKind::Diagonal: return "diagonal";
    case OpKind::Banded: return "banded";
    case OpKind::FiniteBlock: return "finite_block";
    case OpKind::Sum: return "sum";
    case OpKind::Scale: return "scale";
    case OpKind::Compose: return "compose";
    case OpKind::PolyOf: return "poly";
    case OpKind::DirectSum: return "direct_sum";
  }
  return "?";
}

std::shared_ptr<OperatorNode> OperatorSpec::make(OpKind kind, Field field) {
  auto n = std::make_shared<OperatorNode>();
  n->kind = kind;
  n->field = field;
  return n;
}

namespace {

Field common_field(const std::vector<OperatorSpec>& ops, const char* what) {
  if (ops.empty()) throw std::invalid_argument(std::string(what) + " needs at least one operand");
  const Field f = ops.front().field();
  for (const auto& op : ops)
    if (op.field() != f) throw FieldMismatch(std::string(what) + " mixes scalar fields");
  return f;
}

}  // namespace

OperatorSpec OperatorSpec::backward_shift(PeriodicSeq weights) {
  auto n = make(OpKind::BackwardShift, weights.field());
  n->seq.push_back(std::move(weights));
  return OperatorSpec(std::move(n));
}

OperatorSpec OperatorSpec::forward_shift(PeriodicSeq weights) {
  auto n = make(OpKind::ForwardShift, weights.field());
  n->seq.push_back(std::move(weights));
  return OperatorSpec(std::move(n));
}

OperatorSpec OperatorSpec::diagonal(PeriodicSeq entries) {
  auto n = make(OpKind::Diagonal, entries.field());
  n->seq.push_back(std::move(entries));
  return OperatorSpec(std::move(n));
}

OperatorSpec OperatorSpec::banded(std::vector<Band> bands) {
  if (bands.empty()) throw std::invalid_argument("banded operator needs a diagonal");
  const Field f = bands.front().entries.field();
  for (const auto& b : bands)
    if (b.entries.field() != f) throw FieldMismatch("banded diagonals mix scalar fields");
  auto n = make(OpKind::Banded, f);
  n->bands = std::move(bands);
  return OperatorSpec(std::move(n));
}

OperatorSpec OperatorSpec::finite_block(std::vector<std::vector<Scalar>> matrix, OperatorSpec tail) {
  const std::size_t k = matrix.size();
  if (k == 0) throw std::invalid_argument("finite block must be non-empty");
  for (const auto& r : matrix) {
    if (r.size() != k) throw std::invalid_argument("finite block must be square");
    for (const auto& s : r)
      if (s.field() != tail.field()) throw FieldMismatch("finite block and tail fields differ");
  }
  auto n = make(OpKind::FiniteBlock, tail.field());
  n->matrix = std::move(matrix);
  n->children.push_back(std::move(tail));
  return OperatorSpec(std::move(n));
}

OperatorSpec OperatorSpec::sum(std::vector<OperatorSpec> terms) {
  auto n = make(OpKind::Sum, common_field(terms, "sum"));
  n->children = std::move(terms);
  return OperatorSpec(std::move(n));
}

OperatorSpec OperatorSpec::scale(const Scalar& s, OperatorSpec op) {
  if (s.field() != op.field()) throw FieldMismatch("scale factor from another field");
  auto n = make(OpKind::Scale, op.field());
  n->coeffs.push_back(s);
  n->children.push_back(std::move(op));
  return OperatorSpec(std::move(n));
}

OperatorSpec OperatorSpec::compose(std::vector<OperatorSpec> factors) {
  auto n = make(OpKind::Compose, common_field(factors, "compose"));
  n->children = std::move(factors);
  return OperatorSpec(std::move(n));
}

OperatorSpec OperatorSpec::poly_of(std::vector<Scalar> coeffs, OperatorSpec op) {
  if (coeffs.empty()) throw std::invalid_argument("poly needs coefficients");
  for (const auto& c : coeffs)
    if (c.field() != op.field()) throw FieldMismatch("poly coefficients from another field");
  auto n = make(OpKind::PolyOf, op.field());
  n->coeffs = std::move(coeffs);
  n->children.push_back(std::move(op));
  return OperatorSpec(std::move(n));
}

OperatorSpec OperatorSpec::direct_sum(std::vector<OperatorSpec> parts) {
  auto n = make(OpKind::DirectSum, common_field(parts, "direct_sum"));
  n->children = std::move(parts);
  return OperatorSpec(std::move(n));
}

FinSuppVec OperatorSpec::row(Index n) const {
  if (n == 0) throw std::out_of_range("row index starts at 1");
  const bool cached = kind() == OpKind::Compose || kind() == OpKind::PolyOf;
  if (!cached) return compute_row(n);
  {
    std::lock_guard lock(node_->cache_mutex);
    auto it = node_->row_cache.find(n);
    if (it != node_->row_cache.end()) return it->second;
  }
  FinSuppVec r = compute_row(n);
  std::lock_guard lock(node_->cache_mutex);
  node_->row_cache.emplace(n, r);
  return r;
}

FinSuppVec OperatorSpec::compute_row(Index n) const {
  const OperatorNode& nd = *node_;
  const Field f = nd.field;
  switch (nd.kind) {
    case OpKind::BackwardShift:
      return FinSuppVec(f, {{n + 1, nd.seq[0].at(n)}});
    case OpKind::ForwardShift:
      if (n == 1) return FinSuppVec(f);
      return FinSuppVec(f, {{n - 1, nd.seq[0].at(n - 1)}});
    case OpKind::Diagonal:
      return FinSuppVec(f, {{n, nd.seq[0].at(n)}});
    case OpKind::Banded: {
      std::vector<FinSuppVec::Entry> e;
      for (const auto& b : nd.bands) {
        const long col = static_cast<long>(n) + b.offset;
        if (col >= 1) e.emplace_back(static_cast<Index>(col), b.entries.at(n));
      }
      return FinSuppVec(f, std::move(e));
    }
    case OpKind::FiniteBlock: {
      const Index k = nd.matrix.size();
      std::vector<FinSuppVec::Entry> e;
      if (n <= k) {
        for (Index j = 0; j < k; ++j) e.emplace_back(j + 1, nd.matrix[n - 1][j]);
      } else {
        for (const auto& [col, v] : nd.children[0].row(n - k)) e.emplace_back(col + k, v);
      }
      return FinSuppVec(f, std::move(e));
    }
    case OpKind::Sum: {
      FinSuppVec r(f);
      for (const auto& t : nd.children) r += t.row(n);
      return r;
    }
    case OpKind::Scale:
      return nd.coeffs[0] * nd.children[0].row(n);
    case OpKind::Compose: {
      // e_n^T F_1 F_2 ... F_m = (F_m' ... (F_2' (row_n F_1)))
      FinSuppVec r = nd.children[0].row(n);
      for (std::size_t i = 1; i < nd.children.size(); ++i) r = dual_apply(nd.children[i], r);
      return r;
    }
    case OpKind::PolyOf:
      return poly_dual_apply(nd.children[0], Poly(f, nd.coeffs), FinSuppVec::unit(f, n));
    case OpKind::DirectSum: {
      const std::size_t r = nd.children.size();
      const std::size_t j = (n - 1) % r;
      const Index local = (n - 1) / r + 1;
      return embed_part(nd.children[j].row(local), r, j);
    }
  }
  throw std::logic_error("unhandled operator kind");
}

FinSuppVec dual_apply(const OperatorSpec& T, const FinSuppVec& f) {
  if (f.field() != T.field()) throw FieldMismatch("functional and operator fields differ");
  FinSuppVec out(T.field());
  for (const auto& [k, v] : f) out.axpy(v, T.row(k));
  return out;
}

FinSuppVec poly_dual_apply(const OperatorSpec& T, const Poly& p, const FinSuppVec& f) {
  if (p.field() != T.field()) throw FieldMismatch("polynomial and operator fields differ");
  FinSuppVec acc(T.field());
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = dual_apply(T, acc);
    acc.axpy(c[i], f);
  }
  return acc;
}

FinSuppVec dual_power(const OperatorSpec& T, std::size_t n, const FinSuppVec& f) {
  FinSuppVec acc = f;
  for (std::size_t i = 0; i < n && !acc.is_zero(); ++i) acc = dual_apply(T, acc);
  return acc;
}

FinSuppVec apply_prefix(const OperatorSpec& T, const FinSuppVec& u, Index length) {
  std::vector<FinSuppVec::Entry> e;
  for (Index n = 1; n <= length; ++n) e.emplace_back(n, pairing(T.row(n), u));
  return FinSuppVec(T.field(), std::move(e));
}

FinSuppVec embed_part(const FinSuppVec& f, std::size_t parts, std::size_t j) {
  std::vector<FinSuppVec::Entry> e;
  e.reserve(f.nnz());
  for (const auto& [m, v] : f) e.emplace_back((m - 1) * parts + j + 1, v);
  return FinSuppVec(f.field(), std::move(e));
}

}  // namespace weakmix
