#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weakmix {

/// Exact scalar fields: the rationals, or the Gaussian rationals Q(i).
enum class Field { Q, Qi };

const char* field_name(Field f) noexcept;
Field parse_field(std::string_view name);

/// Element of Q or Q(i). The field tag travels with the value; binary
/// operations on values with different tags throw FieldMismatch.
class Scalar {
public:
  Scalar() = default;
  explicit Scalar(Field field) : field_(field) {}
  Scalar(Field field, mpq_class re);
  Scalar(Field field, mpq_class re, mpq_class im);

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(f, mpq_class(1)); }
  static Scalar from_int(Field f, long v) { return Scalar(f, mpq_class(v)); }

  Field field() const noexcept { return field_; }
  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Values compare equal only when both tags and values agree.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "a/b" for Q, "a/b+c/di" for Q(i). Integers drop the "/1".
  std::string to_string() const;

  /// Accepts "a", "a/b", and for Q(i) also "a/b+c/di", "c/di", "i".
  static Scalar parse(std::string_view text, Field field);

private:
  void check_same(const Scalar& o) const;

  Field field_ = Field::Q;
  mpq_class re_;
  mpq_class im_;
};

std::string rational_to_string(const mpq_class& q);
/// Parses "a" or "a/b" exactly; throws ParseError.
mpq_class parse_rational(std::string_view text);

}  // namespace weakmix
