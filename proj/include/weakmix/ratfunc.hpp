#pragma once

#include <string>

#include "weakmix/poly.hpp"

namespace weakmix {

/// Element of K(t) in canonical form: coprime numerator and monic
/// denominator, zero stored as 0/1. Equality is structural.
class RatFunc {
public:
  explicit RatFunc(Field field = Field::Q) : num_(field), den_(Poly::one(field)) {}
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::one(num_.field())) {}
  /// Reduces; throws std::domain_error on a zero denominator.
  RatFunc(Poly num, Poly den);

  static RatFunc constant(const Scalar& c) { return RatFunc(Poly::constant(c)); }

  Field field() const noexcept { return num_.field(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// deg num - deg den, or -inf for zero.
  GradedDegree degree() const;

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc& operator*=(const Scalar& s);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const Scalar& s) { return a *= s; }
  friend RatFunc operator*(const Scalar& s, RatFunc a) { return a *= s; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

private:
  void reduce();

  Poly num_;
  Poly den_;
};

inline GradedDegree rat_degree(const RatFunc& f) { return f.degree(); }
inline RatFunc rat_add(const RatFunc& f, const RatFunc& g) { return f + g; }
inline RatFunc rat_mul(const RatFunc& f, const RatFunc& g) { return f * g; }

/// The multiplication operator Mf(t) = t f(t).
RatFunc m_apply(const RatFunc& f);

}  // namespace weakmix
