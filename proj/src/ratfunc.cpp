#include "weakmix/ratfunc.hpp"

#include <stdexcept>

#include "weakmix/error.hpp"

namespace weakmix {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.field() != den_.field()) throw FieldMismatch("mixed rational function fields");
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > GradedDegree(0)) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  if (!den_.leading().is_one()) {
    Scalar inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

GradedDegree RatFunc::degree() const {
  if (is_zero()) return GradedDegree::neg_inf();
  return num_.degree() - den_.degree().value();
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (field() != o.field()) throw FieldMismatch("mixed rational function fields");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): only g can still divide the new numerator
  const Poly g = gcd(den_, o.den_);
  const Poly b1 = exact_div(den_, g), d1 = exact_div(o.den_, g);
  num_ = num_ * d1 + o.num_ * b1;
  den_ = den_ * d1;
  if (num_.is_zero()) {
    den_ = Poly::one(field());
    return *this;
  }
  if (g.degree() > GradedDegree(0)) {
    const Poly h = gcd(num_, g);
    if (h.degree() > GradedDegree(0)) {
      num_ = exact_div(num_, h);
      den_ = exact_div(den_, h);
    }
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (field() != o.field()) throw FieldMismatch("mixed rational function fields");
  if (is_zero() || o.is_zero()) return *this = RatFunc(field());
  // both operands are reduced, so cross cancellation suffices
  const Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  num_ = exact_div(num_, g1) * exact_div(o.num_, g2);
  den_ = exact_div(den_, g2) * exact_div(o.den_, g1);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return *this *= RatFunc(o.den_, o.num_);
}

RatFunc& RatFunc::operator*=(const Scalar& s) {
  num_ *= s;
  if (num_.is_zero()) den_ = Poly::one(num_.field());
  return *this;
}

std::string RatFunc::to_string() const {
  if (den_.degree() == GradedDegree(0)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc m_apply(const RatFunc& f) { return f * RatFunc(Poly::t(f.field())); }

}  // namespace weakmix
