#include "weakmix/finsupp.hpp"

#include <algorithm>
#include <set>

#include "weakmix/error.hpp"

namespace weakmix {

FinSuppVec::FinSuppVec(Field field, std::vector<Entry> entries) : field_(field) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (e.second.field() != field_) throw FieldMismatch("vector entry from another field");
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
      if (entries_.back().second.is_zero()) entries_.pop_back();
    } else if (!e.second.is_zero()) {
      entries_.push_back(std::move(e));
    }
  }
}

FinSuppVec FinSuppVec::unit(Field field, Index n) {
  FinSuppVec v(field);
  v.entries_.emplace_back(n, Scalar::one(field));
  return v;
}

Scalar FinSuppVec::get(Index n) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != entries_.end() && it->first == n) return it->second;
  return Scalar::zero(field_);
}

FinSuppVec FinSuppVec::operator-() const {
  FinSuppVec r(*this);
  for (auto& e : r.entries_) e.second = -e.second;
  return r;
}

FinSuppVec& FinSuppVec::operator*=(const Scalar& s) {
  if (s.field() != field_) throw FieldMismatch("scalar from another field");
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= s;
  return *this;
}

FinSuppVec& FinSuppVec::axpy(const Scalar& a, const FinSuppVec& x) {
  if (x.field_ != field_ || a.field() != field_) throw FieldMismatch("mixed vector fields");
  if (a.is_zero() || x.is_zero()) return *this;
  std::vector<Entry> out;
  out.reserve(entries_.size() + x.entries_.size());
  auto i = entries_.begin();
  auto j = x.entries_.begin();
  while (i != entries_.end() || j != x.entries_.end()) {
    if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == entries_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Scalar v = std::move(i->second);
      v += a * j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
  return *this;
}

std::string FinSuppVec::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ", ";
    out += "(" + std::to_string(entries_[k].first) + "," + entries_[k].second.to_string() + ")";
  }
  return out + "}";
}

Scalar pairing(const FinSuppVec& f, const FinSuppVec& u) {
  if (f.field() != u.field()) throw FieldMismatch("pairing across fields");
  Scalar acc = Scalar::zero(f.field());
  auto i = f.begin();
  auto j = u.begin();
  while (i != f.end() && j != u.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      acc += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return acc;
}

std::vector<Index> union_support(const std::vector<FinSuppVec>& vs) {
  std::set<Index> s;
  for (const auto& v : vs)
    for (const auto& e : v) s.insert(e.first);
  return {s.begin(), s.end()};
}

}  // namespace weakmix
