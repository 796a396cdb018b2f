#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "weakmix/certificate.hpp"
#include "weakmix/error.hpp"
#include "weakmix/torsion.hpp"

using namespace testing;

namespace {

// sum_j p_j(T') x_j evaluated with naive powers.
FinSuppVec evaluate(const OperatorSpec& T, const Syzygy& s) {
  FinSuppVec acc(T.field());
  for (std::size_t j = 0; j < s.generators.size(); ++j)
    for (std::size_t k = 0; k < s.polys[j].size(); ++k)
      acc.axpy(s.polys[j].coeff(k), naive_power(T, s.generators[j], k));
  return acc;
}

std::vector<FinSuppVec> krylov_oracle(const OperatorSpec& T, const std::vector<FinSuppVec>& xs, std::size_t cap) {
  std::vector<FinSuppVec> out;
  for (const auto& x : xs)
    for (std::size_t k = 0; k <= cap; ++k) out.push_back(naive_power(T, x, k));
  return out;
}

Index max_index(const std::vector<FinSuppVec>& vs) {
  Index m = 1;
  for (const auto& v : vs)
    if (!v.is_zero()) m = std::max(m, v.last_index());
  return m;
}

OperatorSpec block4(Rng& rng) {
  std::vector<std::vector<Scalar>> a(4);
  for (auto& row : a)
    for (int c = 0; c < 4; ++c) row.push_back(Scalar(Field::Q, mpq_class(rng.integer(-2, 2))));
  return OperatorSpec::finite_block(a, backward_shift());
}

}  // namespace

TEST_CASE("find_relation examples") {
  auto fs = find_relation(forward_shift(), {e(1)}, 1);
  REQUIRE(fs);
  CHECK(fs->polys[0] == P("t"));

  CHECK_FALSE(find_relation(backward_shift(), {e(1)}, 10));

  auto two = find_relation(backward_shift(), {e(1), e(2)}, 1);
  REQUIRE(two);
  CHECK(two->polys[0] == P("t"));
  CHECK(two->polys[1] == P("-1"));

  auto diag = find_relation(diagonal({q(3)}), {e(1)}, 4);
  REQUIRE(diag);
  CHECK(diag->polys[0] == P("t - 3"));
}

TEST_CASE("independence report carries a window and a pivot per Krylov vector") {
  auto r = search_relation(backward_shift(), {e(1)}, 10);
  REQUIRE(std::holds_alternative<IndependenceReport>(r));
  const auto& rep = std::get<IndependenceReport>(r);
  CHECK(rep.pivots.size() == 11);
  CHECK(rep.window_lo == 1);
  CHECK(rep.window_hi == 11);
  CHECK(check_independence(backward_shift(), rep));
  IndependenceReport bad = rep;
  bad.pivots[3] = 7;
  CHECK_FALSE(check_independence(backward_shift(), bad));
}

TEST_CASE("relations and independence agree with the dense oracle") {
  Rng rng(101);
  std::vector<OperatorSpec> ops{backward_shift(), forward_shift(), diagonal(), banded12(),
                                OperatorSpec::sum({backward_shift(), forward_shift()}),
                                OperatorSpec::direct_sum({backward_shift(), diagonal()})};
  for (int k = 0; k < 6; ++k) ops.push_back(block4(rng));
  for (const auto& T : ops) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<FinSuppVec> xs;
      const long count = rng.integer(1, 3);
      for (long j = 0; j < count; ++j) xs.push_back(rng.nonzero_vec(Field::Q, 6, 3));
      const std::size_t cap = static_cast<std::size_t>(rng.integer(1, 5));
      auto krylov = krylov_oracle(T, xs, cap);
      const std::size_t rank = dense_rank(krylov, max_index(krylov), Field::Q);
      auto res = search_relation(T, xs, cap);
      if (auto* s = std::get_if<Syzygy>(&res)) {
        CHECK(rank < krylov.size());
        CHECK(evaluate(T, *s).is_zero());
        bool nontrivial = false;
        for (const auto& p : s->polys) {
          nontrivial = nontrivial || !p.is_zero();
          CHECK(p.degree() <= GradedDegree(static_cast<long>(cap)));
        }
        CHECK(nontrivial);
        CHECK(check_syzygy(T, *s));
        // monotone in the cap: the same relation is reported at larger caps
        auto again = find_relation(T, xs, cap + 2);
        REQUIRE(again);
        CHECK(again->polys == s->polys);
      } else {
        CHECK(rank == krylov.size());
        CHECK(check_independence(T, std::get<IndependenceReport>(res)));
      }
    }
  }
}

TEST_CASE("tampered syzygy fails the check") {
  auto s = *find_relation(backward_shift(), {e(1), e(2)}, 1);
  std::string why;
  s.polys[1] = P("1");
  CHECK_FALSE(check_syzygy(backward_shift(), s, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("greedy independent subset examples") {
  auto g = greedy_independent_subset(backward_shift(), {e(1), e(2), e(3)}, 4);
  CHECK(g.kept == std::vector<std::size_t>{0});
  CHECK(g.basis == std::vector<FinSuppVec>{e(1)});
  REQUIRE(g.representations.count(1));
  REQUIRE(g.representations.count(2));
  CHECK(g.representations.at(1).q == P("1"));
  CHECK(g.representations.at(1).p[0] == P("t"));
  CHECK(g.representations.at(2).p[0] == P("t^2"));

  auto h = greedy_independent_subset(backward_shift(), {e(2), e(1)}, 4);
  CHECK(h.basis == std::vector<FinSuppVec>{e(2)});
  REQUIRE(h.representations.count(1));
  CHECK(h.representations.at(1).q == P("t"));
  CHECK(h.representations.at(1).p[0] == P("1"));
}

TEST_CASE("torsion_in_span examples") {
  CHECK(std::holds_alternative<NoTorsionReport>(torsion_in_span(backward_shift(), {e(1), e(2)}, 6)));

  auto fs = torsion_in_span(forward_shift(), {e(1)}, 2);
  REQUIRE(std::holds_alternative<TorsionCertificate>(fs));
  const auto& c = std::get<TorsionCertificate>(fs);
  CHECK(c.x == e(1));
  CHECK(c.annihilator == P("t"));
  CHECK(c.invariant_basis == std::vector<FinSuppVec>{e(1)});

  auto d = torsion_in_span(diagonal({q(3), q(5)}), {e(1)}, 2);
  REQUIRE(std::holds_alternative<TorsionCertificate>(d));
  CHECK(std::get<TorsionCertificate>(d).annihilator == P("t - 3"));

  // torsion hidden in a combination of two non-torsion functionals
  auto T = OperatorSpec::direct_sum({backward_shift(), backward_shift()});
  auto mix = torsion_in_span(T, {e(1) + e(2), e(1) - e(2)}, 4);
  CHECK(std::holds_alternative<NoTorsionReport>(mix));
}

TEST_CASE("torsion certificates for finite blocks divide the characteristic polynomial") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto T = block4(rng);
    auto v = classify(T, 4, 6);
    REQUIRE(v.verdict == Verdict::NotTransitive);
    REQUIRE(v.torsion);
    const auto& c = *v.torsion;
    CHECK(check_torsion(T, c));
    auto a = dense(T, 4);
    Poly chi = char_poly(a);
    CHECK(divmod(chi, c.annihilator).remainder.is_zero());
    CHECK(poly_dual_apply(T, c.annihilator, c.x).is_zero());
    CHECK(c.annihilator.is_monic());
  }
}

TEST_CASE("classify examples") {
  auto bs = classify(backward_shift(), 8, 12);
  CHECK(bs.verdict == Verdict::MixingCertifiedUpTo);
  REQUIRE(bs.no_torsion);
  CHECK(check_no_torsion(backward_shift(), *bs.no_torsion));

  auto fs = classify(forward_shift(), 1, 1);
  CHECK(fs.verdict == Verdict::NotTransitive);
  REQUIRE(fs.torsion);
  CHECK(fs.torsion->annihilator == P("t"));

  CHECK(classify(backward_shift(), 1, 0).verdict == Verdict::Unknown);
  CHECK(classify(backward_shift(), 0, 3).verdict == Verdict::Unknown);

  auto weighted = OperatorSpec::backward_shift(PeriodicSeq({}, {q(2), q(1, 3)}));
  CHECK(classify(weighted, 5, 8).verdict == Verdict::MixingCertifiedUpTo);
  auto sum = OperatorSpec::direct_sum({backward_shift(), banded12()});
  CHECK(classify(sum, 6, 8).verdict == Verdict::MixingCertifiedUpTo);
  auto bad = OperatorSpec::direct_sum({backward_shift(), diagonal()});
  auto bv = classify(bad, 4, 6);
  CHECK(bv.verdict == Verdict::NotTransitive);
  CHECK(bv.torsion->x == e(2));
}

TEST_CASE("tampered torsion certificates fail") {
  auto c = std::get<TorsionCertificate>(torsion_in_span(forward_shift(), {e(1)}, 2));
  auto wrong_poly = c;
  wrong_poly.annihilator = P("t - 1");
  CHECK_FALSE(check_torsion(forward_shift(), wrong_poly));
  auto wrong_basis = c;
  wrong_basis.invariant_basis = {e(2)};
  CHECK_FALSE(check_torsion(forward_shift(), wrong_basis));
  auto zero_x = c;
  zero_x.x = FinSuppVec(Field::Q);
  CHECK_FALSE(check_torsion(forward_shift(), zero_x));
}

TEST_CASE("tampered no-torsion reports fail") {
  auto r = std::get<NoTorsionReport>(torsion_in_span(backward_shift(), {e(1), e(2)}, 6));
  CHECK(check_no_torsion(backward_shift(), r));
  auto short_cap = r;
  short_cap.independence.degree_cap = 0;
  short_cap.independence.pivots.resize(1);
  CHECK_FALSE(check_no_torsion(backward_shift(), short_cap));
  auto wrong_rep = r;
  wrong_rep.representations[1].p[0] = P("t^2");
  CHECK_FALSE(check_no_torsion(backward_shift(), wrong_rep));
  // the same report does not certify an operator with torsion
  CHECK_FALSE(check_no_torsion(forward_shift(), r));
}

TEST_CASE("classification is deterministic") {
  for (const auto& T : {backward_shift(), banded12(), forward_shift()}) {
    auto a = to_json(classify(T, 4, 6)).dump();
    auto b = to_json(classify(T, 4, 6)).dump();
    CHECK(a == b);
  }
}

TEST_CASE("search is refused while the gate is closed") {
  ScopedSearchDisable off;
  CHECK_THROWS_AS(find_relation(backward_shift(), {e(1)}, 2), SearchDisabled);
}

TEST_CASE("Q(i) operators") {
  auto T = OperatorSpec::diagonal(PeriodicSeq({}, {qi(0, 1)}));
  auto v = classify(T, 2, 3);
  REQUIRE(v.verdict == Verdict::NotTransitive);
  CHECK(v.torsion->annihilator == Poly::parse("t - (i)", Field::Qi));
}
