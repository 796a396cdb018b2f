#include "weakmix/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "weakmix/error.hpp"

namespace weakmix {

const char* field_name(Field f) noexcept { return f == Field::Q ? "Q" : "Qi"; }

Field parse_field(std::string_view name) {
  if (name == "Q") return Field::Q;
  if (name == "Qi") return Field::Qi;
  throw ParseError("", "unknown field tag '" + std::string(name) + "'");
}

Scalar::Scalar(Field field, mpq_class re) : field_(field), re_(std::move(re)) {
  re_.canonicalize();
}

Scalar::Scalar(Field field, mpq_class re, mpq_class im)
    : field_(field), re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
  if (field_ == Field::Q && sgn(im_) != 0)
    throw FieldMismatch("imaginary part in a Q scalar");
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch(std::string("mixed scalar fields ") + field_name(field_) +
                        " and " + field_name(o.field_));
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.re_ = -r.re_;
  r.im_ = -r.im_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  re_ += o.re_;
  if (field_ == Field::Qi) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  re_ -= o.re_;
  if (field_ == Field::Qi) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_ == Field::Q) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (field_ == Field::Q) return Scalar(field_, 1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(field_, re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (field_ == Field::Q) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero scalar");
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("", "malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(i, s.size())) throw bad();
  } else if (!digits(i, slash) || !digits(slash + 1, s.size())) {
    throw bad();
  }
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw ParseError("", "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string Scalar::to_string() const {
  if (field_ == Field::Q) return rational_to_string(re_);
  std::string out = rational_to_string(re_);
  if (sgn(im_) < 0) {
    out += "-" + rational_to_string(-im_);
  } else {
    out += "+" + rational_to_string(im_);
  }
  return out + "i";
}

Scalar Scalar::parse(std::string_view text, Field field) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("", "empty scalar");
  if (s.back() != 'i') return Scalar(field, parse_rational(s));
  if (field == Field::Q)
    throw FieldMismatch("imaginary scalar '" + s + "' in a Q context");
  s.pop_back();
  // Split at the last sign that is not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  auto imag = [](const std::string& t) -> mpq_class {
    if (t.empty() || t == "+") return 1;
    if (t == "-") return -1;
    return parse_rational(t);
  };
  mpq_class re = re_text.empty() ? mpq_class(0) : parse_rational(re_text);
  return Scalar(field, re, imag(im_text));
}

}  // namespace weakmix
