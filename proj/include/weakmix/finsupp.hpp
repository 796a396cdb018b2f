#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weakmix/scalar.hpp"

namespace weakmix {

using Index = std::uint64_t;

/// Finitely supported sequence over K, indexed from 1. Entries are kept
/// sorted by index with no stored zeros; the zero vector is empty.
class FinSuppVec {
public:
  using Entry = std::pair<Index, Scalar>;

  explicit FinSuppVec(Field field = Field::Q) : field_(field) {}
  /// Sorts, merges duplicates and drops zeros.
  FinSuppVec(Field field, std::vector<Entry> entries);

  /// The basis vector e_n (or e_n*).
  static FinSuppVec unit(Field field, Index n);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// Zero when absent.
  Scalar get(Index n) const;
  /// Precondition: nonzero.
  Index first_index() const { return entries_.front().first; }
  Index last_index() const { return entries_.back().first; }
  const Scalar& first_value() const { return entries_.front().second; }

  FinSuppVec operator-() const;
  FinSuppVec& operator+=(const FinSuppVec& o) { return axpy(Scalar::one(field_), o); }
  FinSuppVec& operator-=(const FinSuppVec& o) { return axpy(-Scalar::one(field_), o); }
  FinSuppVec& operator*=(const Scalar& s);
  /// this += a * x
  FinSuppVec& axpy(const Scalar& a, const FinSuppVec& x);

  friend FinSuppVec operator+(FinSuppVec a, const FinSuppVec& b) { return a += b; }
  friend FinSuppVec operator-(FinSuppVec a, const FinSuppVec& b) { return a -= b; }
  friend FinSuppVec operator*(FinSuppVec a, const Scalar& s) { return a *= s; }
  friend FinSuppVec operator*(const Scalar& s, FinSuppVec a) { return a *= s; }
  friend bool operator==(const FinSuppVec& a, const FinSuppVec& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

  /// e.g. "{(1,2), (4,1/3)}"
  std::string to_string() const;

private:
  Field field_;
  std::vector<Entry> entries_;
};

/// Sum of f_n u_n over the common support.
Scalar pairing(const FinSuppVec& f, const FinSuppVec& u);

/// Sorted union of the supports.
std::vector<Index> union_support(const std::vector<FinSuppVec>& vs);

}  // namespace weakmix
