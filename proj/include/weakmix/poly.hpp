#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weakmix/scalar.hpp"

namespace weakmix {

/// Integer degree extended by -inf, the degree of zero.
class GradedDegree {
public:
  constexpr GradedDegree() = default;  // -inf
  constexpr GradedDegree(long v) : value_(v) {}  // NOLINT(implicit)

  static constexpr GradedDegree neg_inf() { return GradedDegree(); }

  constexpr bool is_neg_inf() const noexcept { return !value_.has_value(); }
  /// Precondition: finite.
  long value() const { return value_.value(); }

  friend constexpr GradedDegree operator+(GradedDegree a, GradedDegree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return GradedDegree(*a.value_ + *b.value_);
  }
  friend constexpr GradedDegree operator-(GradedDegree a, long b) {
    if (a.is_neg_inf()) return neg_inf();
    return GradedDegree(*a.value_ - b);
  }
  friend constexpr bool operator==(GradedDegree a, GradedDegree b) = default;
  friend constexpr std::strong_ordering operator<=>(GradedDegree a, GradedDegree b) {
    if (a.is_neg_inf() || b.is_neg_inf())
      return b.is_neg_inf() <=> a.is_neg_inf();
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const {
    return is_neg_inf() ? "-inf" : std::to_string(*value_);
  }

private:
  std::optional<long> value_;
};

inline GradedDegree max(GradedDegree a, GradedDegree b) { return a < b ? b : a; }

/// Dense univariate polynomial in t, lowest degree first, no trailing zeros.
class Poly {
public:
  explicit Poly(Field field = Field::Q) : field_(field) {}
  Poly(Field field, std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  static Poly monomial(const Scalar& c, std::size_t degree);
  /// The variable t.
  static Poly t(Field field) { return monomial(Scalar::one(field), 1); }
  static Poly one(Field field) { return constant(Scalar::one(field)); }

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  GradedDegree degree() const {
    return is_zero() ? GradedDegree::neg_inf() : GradedDegree(long(coeffs_.size()) - 1);
  }
  /// Number of stored coefficients (degree + 1, or 0).
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  /// Zero past the leading term.
  Scalar coeff(std::size_t k) const;
  /// Precondition: nonzero.
  const Scalar& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading().is_one(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { Poly r(a); return r *= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiply by t^k.
  Poly shifted(std::size_t k) const;
  /// Divides by the leading coefficient. Zero stays zero.
  Poly monic() const;

  Scalar evaluate(const Scalar& x) const;

  /// Canonical text form, e.g. "3*t^2 - 1/2*t + 4".
  std::string to_string() const;
  /// Accepts the human form "t^3 - 2*t + 1"; Q(i) coefficients go in
  /// parentheses, e.g. "(1+2i)*t".
  static Poly parse(std::string_view text, Field field);

private:
  void trim();
  void check_same(const Poly& o) const;

  Field field_;
  std::vector<Scalar> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division. Throws std::domain_error on a zero divisor.
PolyDivision divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Monic lcm; lcm with 0 is 0.
Poly lcm(const Poly& a, const Poly& b);
/// Exact quotient; throws std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

}  // namespace weakmix
