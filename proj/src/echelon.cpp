#include "weakmix/echelon.hpp"

#include <stdexcept>

namespace weakmix {

std::optional<FinSuppVec> Echelon::insert(const FinSuppVec& v) {
  const Index id = ++count_;
  FinSuppVec w = v;
  FinSuppVec combo = FinSuppVec::unit(field_, id);
  while (!w.is_zero()) {
    auto it = rows_.find(w.first_index());
    if (it == rows_.end()) break;
    const Scalar a = -w.first_value();
    w.axpy(a, it->second.vec);
    combo.axpy(a, it->second.combo);
  }
  if (w.is_zero()) return combo;
  const Scalar s = w.first_value().inverse();
  w *= s;
  combo *= s;
  const Index pivot = w.first_index();
  last_pivot_ = pivot;
  rows_.emplace(pivot, Row{std::move(w), std::move(combo)});
  return std::nullopt;
}

bool Echelon::would_be_independent(const FinSuppVec& v) const {
  FinSuppVec w = v;
  while (!w.is_zero()) {
    auto it = rows_.find(w.first_index());
    if (it == rows_.end()) return true;
    w.axpy(-w.first_value(), it->second.vec);
  }
  return false;
}

std::optional<FinSuppVec> Echelon::coordinates(const FinSuppVec& v) const {
  FinSuppVec w = v;
  FinSuppVec combo(field_);
  while (!w.is_zero()) {
    auto it = rows_.find(w.first_index());
    if (it == rows_.end()) return std::nullopt;
    const Scalar a = w.first_value();
    w.axpy(-a, it->second.vec);
    combo.axpy(a, it->second.combo);
  }
  return combo;
}

std::vector<FinSuppVec> kernel_basis(Field field, const std::vector<FinSuppVec>& columns) {
  Echelon e(field);
  std::vector<FinSuppVec> out;
  for (const auto& c : columns)
    if (auto rel = e.insert(c)) out.push_back(std::move(*rel));
  return out;
}

std::vector<std::size_t> independent_subset(Field field, const std::vector<FinSuppVec>& vs) {
  Echelon e(field);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < vs.size(); ++k)
    if (!e.insert(vs[k])) keep.push_back(k);
  return keep;
}

std::size_t rank_of(Field field, const std::vector<FinSuppVec>& vs) {
  return independent_subset(field, vs).size();
}

std::variant<FinSuppVec, Inconsistency> solve_functionals(const std::vector<FinSuppVec>& functionals,
                                                          const std::vector<Scalar>& values) {
  if (functionals.size() != values.size())
    throw std::invalid_argument("functional/value count mismatch");
  const Field field = functionals.empty() ? Field::Q : functionals.front().field();
  auto combine = [&](const FinSuppVec& combo) {
    Scalar acc = Scalar::zero(field);
    for (const auto& [id, c] : combo) acc += c * values[id - 1];
    return acc;
  };
  Echelon e(field);
  for (const auto& h : functionals) {
    if (auto rel = e.insert(h)) {
      if (!combine(*rel).is_zero()) return Inconsistency{std::move(*rel)};
    }
  }
  // Back substitution from the largest pivot down; free coordinates stay 0.
  FinSuppVec solved(field);
  for (auto it = e.rows().rbegin(); it != e.rows().rend(); ++it) {
    const auto& [pivot, row] = *it;
    Scalar value = combine(row.combo);
    for (const auto& [k, a] : row.vec)
      if (k != pivot) value -= a * solved.get(k);
    if (!value.is_zero()) solved += FinSuppVec(field, {{pivot, value}});
  }
  return solved;
}

}  // namespace weakmix
