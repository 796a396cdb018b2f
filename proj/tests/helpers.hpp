#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing in
// here calls the search code; the oracles use dense truncated matrices and
// cofactor expansion only.

#include <random>
#include <vector>

#include "weakmix/operator.hpp"
#include "weakmix/poly.hpp"
#include "weakmix/ratfunc.hpp"

namespace testing {

using namespace weakmix;

inline Scalar q(long num, long den = 1) { return Scalar(Field::Q, mpq_class(num, den)); }
inline Scalar qi(long re, long im) { return Scalar(Field::Qi, mpq_class(re), mpq_class(im)); }
inline FinSuppVec e(Index n, Field f = Field::Q) { return FinSuppVec::unit(f, n); }
inline Poly P(const char* text, Field f = Field::Q) { return Poly::parse(text, f); }

inline OperatorSpec backward_shift(Field f = Field::Q) {
  return OperatorSpec::backward_shift(PeriodicSeq::constant(Scalar::one(f)));
}
inline OperatorSpec forward_shift(Field f = Field::Q) {
  return OperatorSpec::forward_shift(PeriodicSeq::constant(Scalar::one(f)));
}
/// Entries 1, 2, 3 repeating unless given.
inline OperatorSpec diagonal(std::vector<Scalar> entries = {q(1), q(2), q(3)}) {
  return OperatorSpec::diagonal(PeriodicSeq({}, std::move(entries)));
}
/// T[n,n+1] = T[n,n+2] = 1.
inline OperatorSpec banded12(Field f = Field::Q) {
  return OperatorSpec::banded({{1, PeriodicSeq::constant(Scalar::one(f))},
                               {2, PeriodicSeq::constant(Scalar::one(f))}});
}

/// Dense n x n truncation of T: entry (r, c) = T[r+1, c+1].
inline std::vector<std::vector<Scalar>> dense(const OperatorSpec& T, std::size_t n) {
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(T.field())));
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, v] : T.row(r + 1))
      if (c <= n) m[r][c - 1] = v;
  return m;
}

inline std::vector<std::vector<Scalar>> matmul(const std::vector<std::vector<Scalar>>& a,
                                               const std::vector<std::vector<Scalar>>& b) {
  const std::size_t n = a.size();
  const Field f = a[0][0].field();
  std::vector<std::vector<Scalar>> out(n, std::vector<Scalar>(n, Scalar::zero(f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// det(M) over K[t] by cofactor expansion along the first row.
inline Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  const Field f = m[0][0].field();
  if (n == 1) return m[0][0];
  Poly acc(f);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][c] * poly_det(minor);
    if (c % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

/// det(tI - A) by cofactor expansion.
inline Poly char_poly(const std::vector<std::vector<Scalar>>& a) {
  const Field f = a[0][0].field();
  std::vector<std::vector<Poly>> m;
  for (std::size_t r = 0; r < a.size(); ++r) {
    std::vector<Poly> row;
    for (std::size_t c = 0; c < a.size(); ++c) {
      Poly entry = Poly::constant(-a[r][c]);
      if (r == c) entry += Poly::t(f);
      row.push_back(entry);
    }
    m.push_back(std::move(row));
  }
  return poly_det(m);
}

/// Rank of a list of vectors by dense Gaussian elimination on the first n coordinates.
inline std::size_t dense_rank(const std::vector<FinSuppVec>& vs, Index n, Field f) {
  std::vector<std::vector<Scalar>> m;
  for (const auto& v : vs) {
    std::vector<Scalar> row(n, Scalar::zero(f));
    for (const auto& [i, c] : v)
      if (i <= n) row[i - 1] = c;
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (Index col = 0; col < n && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Scalar factor = m[r][col] / m[rank][col];
      for (Index c = col; c < n; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

/// Naive iterate (T')^k x by repeated dual application.
inline FinSuppVec naive_power(const OperatorSpec& T, FinSuppVec x, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    FinSuppVec next(T.field());
    for (const auto& [n, c] : x) next.axpy(c, T.row(n));
    x = std::move(next);
  }
  return x;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  bool coin() { return integer(0, 1) == 1; }

  Scalar scalar(Field f, long span = 5) {
    mpq_class re(integer(-span, span), integer(1, 4));
    if (f == Field::Q) return Scalar(f, re);
    mpq_class im(integer(-span, span), integer(1, 4));
    return Scalar(f, re, im);
  }
  Scalar nonzero_scalar(Field f, long span = 5) {
    for (;;) {
      Scalar s = scalar(f, span);
      if (!s.is_zero()) return s;
    }
  }
  Poly poly(Field f, long max_degree) {
    std::vector<Scalar> c;
    const long d = integer(0, max_degree);
    for (long k = 0; k <= d; ++k) c.push_back(scalar(f));
    return Poly(f, std::move(c));
  }
  RatFunc ratfunc(Field f, long max_degree) {
    Poly den = poly(f, max_degree);
    while (den.is_zero()) den = poly(f, max_degree);
    return RatFunc(poly(f, max_degree), den);
  }
  FinSuppVec vec(Field f, Index max_index, std::size_t max_terms) {
    std::vector<FinSuppVec::Entry> e;
    const long terms = integer(1, static_cast<long>(max_terms));
    for (long k = 0; k < terms; ++k)
      e.emplace_back(static_cast<Index>(integer(1, static_cast<long>(max_index))), scalar(f));
    return FinSuppVec(f, std::move(e));
  }
  FinSuppVec nonzero_vec(Field f, Index max_index, std::size_t max_terms) {
    for (;;) {
      FinSuppVec v = vec(f, max_index, max_terms);
      if (!v.is_zero()) return v;
    }
  }
};

}  // namespace testing

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<weakmix::FinSuppVec> {
  static String convert(const weakmix::FinSuppVec& v) { return v.to_string().c_str(); }
};
template <>
struct StringMaker<weakmix::Poly> {
  static String convert(const weakmix::Poly& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
#endif
