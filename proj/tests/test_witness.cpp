#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "weakmix/witness.hpp"

using namespace testing;

namespace {

AffineCylinder coords(std::vector<std::pair<Index, Scalar>> values) {
  AffineCylinder c;
  for (auto& [n, v] : values) c.constraints.push_back({e(n), v});
  return c;
}

// T^n u through the dense truncation, for operators whose rows only look ahead.
std::vector<Scalar> dense_orbit(const OperatorSpec& T, const FinSuppVec& u, std::size_t n, std::size_t size) {
  auto M = dense(T, size);
  std::vector<Scalar> v(size, q(0));
  for (const auto& [i, c] : u)
    if (i <= size) v[i - 1] = c;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Scalar> next(size, q(0));
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) next[r] += M[r][c] * v[c];
    v = std::move(next);
  }
  return v;
}

bool in_support(const FinSuppVec& u, const AffineCylinder& a, const AffineCylinder& b, const OperatorSpec& T,
                const Poly& p) {
  std::vector<FinSuppVec> fs = a.functionals();
  for (const auto& g : b.functionals()) fs.push_back(poly_dual_apply(T, p, g));
  auto support = union_support(fs);
  for (const auto& [n, c] : u)
    if (!std::binary_search(support.begin(), support.end(), n)) return false;
  return true;
}

}  // namespace

TEST_CASE("witness examples") {
  auto w = witness(backward_shift(), coords({{1, q(1)}}), coords({{1, q(2)}}), P("t^3"));
  REQUIRE(std::holds_alternative<Witness>(w));
  CHECK(std::get<Witness>(w).u == e(1) + e(4) * q(2));
  CHECK(check_witness(backward_shift(), std::get<Witness>(w)));

  auto bad = witness(backward_shift(), coords({{1, q(1)}}), coords({{1, q(2)}}), P("1"));
  REQUIRE(std::holds_alternative<Infeasible>(bad));
  CHECK(check_infeasible(backward_shift(), std::get<Infeasible>(bad)));

  auto w4 = witness(backward_shift(), coords({{1, q(1)}, {2, q(0)}}), coords({{1, q(0)}, {2, q(5)}}), P("t^2"));
  REQUIRE(std::holds_alternative<Witness>(w4));
  const auto& u = std::get<Witness>(w4).u;
  CHECK(u.get(1) == q(1));
  CHECK(u.get(2) == q(0));
  CHECK(u.get(3) == q(0));
  CHECK(u.get(4) == q(5));
}

TEST_CASE("tampered witnesses fail") {
  auto w = std::get<Witness>(witness(backward_shift(), coords({{1, q(1)}}), coords({{1, q(2)}}), P("t^3")));
  auto moved = w;
  moved.u = e(1) + e(3) * q(2);
  CHECK_FALSE(check_witness(backward_shift(), moved));
  auto inf = std::get<Infeasible>(witness(backward_shift(), coords({{1, q(1)}}), coords({{1, q(2)}}), P("1")));
  inf.target = coords({{1, q(1)}});
  CHECK_FALSE(check_infeasible(backward_shift(), inf));
}

TEST_CASE("verify_visit examples") {
  FinSuppVec u = e(1) + e(4) * q(2);
  CHECK(verify_visit(backward_shift(), u, 3, coords({{1, q(2)}})));
  CHECK_FALSE(verify_visit(backward_shift(), u, 2, coords({{1, q(2)}})));
  CHECK(verify_visit(backward_shift(), u, 0, coords({{1, q(1)}})));
  CHECK_FALSE(verify_visit(backward_shift(), u, 0, coords({{1, q(2)}})));
}

TEST_CASE("mixing threshold examples") {
  auto k3 = mixing_threshold(backward_shift(), coords({{1, q(1)}, {2, q(2)}, {3, q(3)}}),
                             coords({{1, q(0)}, {2, q(1)}, {3, q(0)}}), 12);
  REQUIRE(std::holds_alternative<Threshold>(k3));
  CHECK(std::get<Threshold>(k3).k == 3);

  auto k1 = mixing_threshold(backward_shift(), coords({{1, q(1)}}), coords({{1, q(-4)}}), 12);
  REQUIRE(std::holds_alternative<Threshold>(k1));
  CHECK(std::get<Threshold>(k1).k == 1);

  auto tors = mixing_threshold(forward_shift(), coords({{1, q(1)}}), coords({{2, q(1)}}), 4);
  CHECK(std::holds_alternative<TorsionCertificate>(tors));
}

TEST_CASE("witnesses exist above the threshold for random coordinate cylinders") {
  Rng rng(31337);
  for (const auto& T : {backward_shift(), banded12()}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::pair<Index, Scalar>> src, tgt;
      for (Index n = 1; n <= static_cast<Index>(rng.integer(1, 3)); ++n) src.emplace_back(n, rng.scalar(Field::Q));
      for (Index n = 1; n <= static_cast<Index>(rng.integer(1, 3)); ++n) tgt.emplace_back(n, rng.scalar(Field::Q));
      auto a = coords(src), b = coords(tgt);
      auto th = mixing_threshold(T, a, b, 12);
      REQUIRE(std::holds_alternative<Threshold>(th));
      const long k = std::get<Threshold>(th).k;
      std::vector<Poly> ps{Poly::monomial(q(1), k), Poly::monomial(q(1), k + 2)};
      ps.push_back(rng.poly(Field::Q, k - 1) + Poly::monomial(rng.nonzero_scalar(Field::Q), k + rng.integer(0, 2)));
      for (const auto& p : ps) {
        auto w = witness(T, a, b, p);
        REQUIRE(std::holds_alternative<Witness>(w));
        const auto& wit = std::get<Witness>(w);
        CHECK(check_witness(T, wit));
        CHECK(a.contains(wit.u));
        CHECK(in_support(wit.u, a, b, T, p));
      }
    }
  }
}

TEST_CASE("dual evaluation agrees with the explicit orbit") {
  Rng rng(8);
  for (const auto& T : {backward_shift(), banded12(), OperatorSpec::backward_shift(PeriodicSeq({q(2)}, {q(1, 2)}))}) {
    for (int trial = 0; trial < 40; ++trial) {
      FinSuppVec g = rng.vec(Field::Q, 5, 3), u = rng.vec(Field::Q, 12, 6);
      const std::size_t n = static_cast<std::size_t>(rng.integer(0, 4));
      auto orbit = dense_orbit(T, u, n, 30);
      Scalar direct = q(0);
      for (const auto& [i, c] : g) direct += c * orbit[i - 1];
      CHECK(pairing(poly_dual_apply(T, Poly::monomial(q(1), n), g), u) == direct);
    }
  }
}

TEST_CASE("schedule examples") {
  auto s = schedule_orbit(backward_shift(), coords({{1, q(0)}}),
                          {coords({{1, q(1)}}), coords({{1, q(2)}}), coords({{1, q(3)}})}, 12);
  REQUIRE(std::holds_alternative<VisitSchedule>(s));
  const auto& sched = std::get<VisitSchedule>(s);
  CHECK(sched.u == e(2) + e(3) * q(2) + e(4) * q(3));
  REQUIRE(sched.visits.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(sched.visits[i].power == i + 1);
    CHECK(verify_visit(backward_shift(), sched.u, sched.visits[i].power, sched.visits[i].target));
  }
  CHECK(check_schedule(backward_shift(), sched));

  auto tampered = sched;
  tampered.visits[1].power = 4;
  CHECK_FALSE(check_schedule(backward_shift(), tampered));

  // one target matches the plain witness at the chosen power
  auto single = std::get<VisitSchedule>(schedule_orbit(backward_shift(), coords({{1, q(1)}}), {coords({{1, q(2)}})}, 12));
  auto w = std::get<Witness>(witness(backward_shift(), coords({{1, q(1)}}), coords({{1, q(2)}}),
                                     Poly::monomial(q(1), static_cast<long>(single.visits[0].power))));
  CHECK(single.u == w.u);
}

TEST_CASE("direct sums admit paired schedules") {
  for (const auto& base : {backward_shift(), banded12()}) {
    auto T = OperatorSpec::direct_sum({base, base});
    auto src = coords({{1, q(1)}, {2, q(-1)}});
    std::vector<AffineCylinder> targets{coords({{1, q(2)}, {2, q(3)}}), coords({{1, q(0)}, {2, q(1, 2)}}),
                                        coords({{3, q(1)}, {4, q(1)}})};
    auto s = schedule_orbit(T, src, targets, 12);
    REQUIRE(std::holds_alternative<VisitSchedule>(s));
    const auto& sched = std::get<VisitSchedule>(s);
    CHECK(check_schedule(T, sched));
    for (std::size_t i = 1; i < sched.visits.size(); ++i) CHECK(sched.visits[i].power > sched.visits[i - 1].power);
  }
}

TEST_CASE("dependent source constraints give up") {
  AffineCylinder src;
  src.constraints = {{e(1), q(1)}, {e(1) * q(2), q(2)}};
  CHECK(std::holds_alternative<Unknown>(schedule_orbit(backward_shift(), src, {coords({{1, q(1)}})}, 8)));
}
