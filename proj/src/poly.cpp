#include "weakmix/poly.hpp"

#include <cctype>
#include <stdexcept>

#include "weakmix/error.hpp"

namespace weakmix {

Poly::Poly(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.field() != field_) throw FieldMismatch("polynomial coefficient from another field");
  trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, Scalar::zero(c.field()));
  v[degree] = c;
  return Poly(c.field(), std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (field_ != o.field_) throw FieldMismatch("mixed polynomial fields");
}

Scalar Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_);
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  check_same(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s.field() != field_) throw FieldMismatch("scalar from another field");
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  Poly r(field_);
  r.coeffs_.assign(k, Scalar::zero(field_));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * leading().inverse();
}

Scalar Poly::evaluate(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.field() != b.field()) throw FieldMismatch("mixed polynomial fields");
  const Field f = a.field();
  std::vector<Scalar> rem = a.coeffs();
  const std::size_t db = b.size() - 1;
  if (rem.size() < b.size()) return {Poly(f), a};
  std::vector<Scalar> quo(rem.size() - db, Scalar::zero(f));
  const Scalar inv_lead = b.leading().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    Scalar factor = rem[k] * inv_lead;
    quo[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

namespace {

// Remainder of x by a monic y, in place.
void reduce_by_monic(std::vector<Scalar>& x, const Poly& y) {
  const std::size_t dy = y.size() - 1;
  const auto& yc = y.coeffs();
  for (std::size_t k = x.size(); k-- > dy;) {
    if (x[k].is_zero()) continue;
    const Scalar factor = x[k];
    for (std::size_t j = 0; j < dy; ++j)
      if (!yc[j].is_zero()) x[k - dy + j] -= factor * yc[j];
    x[k] = Scalar::zero(factor.field());
  }
  x.resize(std::min(x.size(), dy));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a.monic();
  Poly x = a, y = b.monic();
  while (!y.is_zero()) {
    std::vector<Scalar> r = x.coeffs();
    reduce_by_monic(r, y);
    x = std::move(y);
    y = Poly(x.field(), std::move(r)).monic();
  }
  return x;
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return exact_div(a * b, gcd(a, b)).monic();
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.size() == 1 && b.leading().is_one()) return a;
  auto d = divmod(a, b);
  if (!d.remainder.is_zero()) throw std::domain_error("inexact polynomial division");
  return d.quotient;
}

namespace {

std::string coeff_text(const Scalar& c) {
  if (c.is_real()) return rational_to_string(abs(c.re()));
  return "(" + c.to_string() + ")";
}

}  // namespace

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.is_real() && sgn(c.re()) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = c.is_real() && abs(c.re()) == 1;
    if (k == 0) {
      out += coeff_text(c);
      continue;
    }
    if (!unit) out += coeff_text(c) + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, Field field) : field_(field) {
    auto word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '/' || c == '^'; };
    bool gap = false;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        gap = !s_.empty();
        continue;
      }
      if (gap && word(c) && word(s_.back()))
        throw ParseError("", "missing operator between terms in '" + std::string(text) + "'");
      gap = false;
      s_.push_back(c);
    }
  }

  Poly run() {
    if (s_.empty()) fail("empty polynomial");
    Poly acc(field_);
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = s_[pos_++] == '-';
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Poly term = parse_term();
      acc += negative ? -term : term;
      first = false;
    }
    return acc;
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("", msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  Poly parse_term() {
    Scalar coef = Scalar::one(field_);
    bool have_coef = false;
    if (peek() == '(') {
      std::size_t close = s_.find(')', pos_);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      coef = Scalar::parse(s_.substr(pos_ + 1, close - pos_ - 1), field_);
      pos_ = close + 1;
      have_coef = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == 'i') {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      if (peek() == 'i') ++pos_;
      coef = Scalar::parse(s_.substr(start, pos_ - start), field_);
      have_coef = true;
    }
    if (have_coef && peek() == '*') {
      ++pos_;
      if (peek() != 't') fail("expected 't' after '*'");
    }
    if (peek() != 't') {
      if (!have_coef) fail("expected a coefficient or 't'");
      return Poly::constant(coef);
    }
    ++pos_;
    std::size_t degree = 1;
    if (peek() == '^') {
      ++pos_;
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected exponent");
      degree = std::stoul(s_.substr(start, pos_ - start));
    }
    return Poly::monomial(coef, degree);
  }

  Field field_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, Field field) { return PolyParser(text, field).run(); }

}  // namespace weakmix
