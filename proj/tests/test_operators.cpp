#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "weakmix/error.hpp"
#include "weakmix/json_io.hpp"

using namespace testing;

namespace {

FinSuppVec vec(std::vector<std::pair<Index, Scalar>> e) { return FinSuppVec(Field::Q, std::move(e)); }

std::vector<OperatorSpec> zoo() {
  const Field f = Field::Q;
  std::vector<OperatorSpec> ops{backward_shift(), forward_shift(), diagonal(), banded12()};
  ops.push_back(OperatorSpec::backward_shift(PeriodicSeq({q(2)}, {q(1, 2), q(3)})));
  ops.push_back(OperatorSpec::banded({{-1, PeriodicSeq::constant(q(1))}, {0, PeriodicSeq({}, {q(2), q(-1)})},
                                      {3, PeriodicSeq::constant(q(1, 3))}}));
  ops.push_back(OperatorSpec::finite_block({{q(1), q(2)}, {q(0), q(-1)}}, backward_shift()));
  ops.push_back(OperatorSpec::sum({backward_shift(), diagonal()}));
  ops.push_back(OperatorSpec::scale(q(-3, 2), banded12()));
  ops.push_back(OperatorSpec::compose({backward_shift(), diagonal(), forward_shift()}));
  ops.push_back(OperatorSpec::poly_of({q(1), q(0), q(2)}, backward_shift()));
  ops.push_back(OperatorSpec::direct_sum({backward_shift(), diagonal(), forward_shift()}));
  ops.push_back(OperatorSpec::direct_sum({banded12(), OperatorSpec::finite_block({{q(5)}}, forward_shift(f))}));
  return ops;
}

}  // namespace

TEST_CASE("PeriodicSeq indexing") {
  PeriodicSeq s({q(7)}, {q(1), q(2)});
  CHECK(s.at(1) == q(7));
  CHECK(s.at(2) == q(1));
  CHECK(s.at(3) == q(2));
  CHECK(s.at(4) == q(1));
  CHECK_THROWS_AS(PeriodicSeq({q(1)}, {}), std::invalid_argument);
}

TEST_CASE("row examples") {
  CHECK(backward_shift().row(1) == vec({{2, q(1)}}));
  CHECK(diagonal().row(2) == vec({{2, q(2)}}));
  CHECK(forward_shift().row(1).is_zero());
  CHECK(forward_shift().row(3) == vec({{2, q(1)}}));
  CHECK(banded12().row(4) == vec({{5, q(1)}, {6, q(1)}}));
  auto block = OperatorSpec::finite_block({{q(1), q(2)}, {q(3), q(4)}}, backward_shift());
  CHECK(block.row(1) == vec({{1, q(1)}, {2, q(2)}}));
  CHECK(block.row(3) == vec({{4, q(1)}}));
  auto neg = OperatorSpec::banded({{-2, PeriodicSeq::constant(q(1))}});
  CHECK(neg.row(2).is_zero());
  CHECK(neg.row(3) == vec({{1, q(1)}}));
}

TEST_CASE("compose of two backward shifts matches the dense product") {
  auto T = OperatorSpec::compose({backward_shift(), backward_shift()});
  CHECK(T.row(1) == vec({{3, q(1)}}));
  auto prod = matmul(dense(backward_shift(), 8), dense(backward_shift(), 8));
  CHECK(dense(T, 6) == std::vector<std::vector<Scalar>>(
                           [&] {
                             std::vector<std::vector<Scalar>> m(6);
                             for (int r = 0; r < 6; ++r) m[r].assign(prod[r].begin(), prod[r].begin() + 6);
                             return m;
                           }()));
}

TEST_CASE("compose and poly rows agree with dense matrix algebra") {
  const std::size_t n = 12, check = 6;  // bandwidth stays below n - check
  auto B = backward_shift(), D = diagonal(), F = forward_shift();
  auto composite = OperatorSpec::compose({B, D, F});
  auto expected = matmul(matmul(dense(B, n), dense(D, n)), dense(F, n));
  auto poly = OperatorSpec::poly_of({q(1), q(0), q(2)}, banded12());
  auto band = dense(banded12(), n);
  auto sq = matmul(band, band);
  for (std::size_t r = 0; r < check; ++r)
    for (std::size_t c = 0; c < check; ++c) {
      CHECK(dense(composite, check)[r][c] == expected[r][c]);
      Scalar want = q(2) * sq[r][c] + (r == c ? q(1) : q(0));
      CHECK(dense(poly, check)[r][c] == want);
    }
}

TEST_CASE("dual_apply examples") {
  CHECK(dual_apply(backward_shift(), e(1)) == e(2));
  CHECK(dual_apply(forward_shift(), e(1)).is_zero());
  CHECK(dual_apply(diagonal(), e(1)) == e(1) * q(1));
  CHECK(dual_apply(diagonal({q(3)}), e(1)) == e(1) * q(3));
}

TEST_CASE("poly_dual_apply examples") {
  FinSuppVec f = vec({{2, q(1)}, {5, q(-3)}});
  CHECK(poly_dual_apply(banded12(), P("1"), f) == f);
  CHECK(poly_dual_apply(backward_shift(), P("t^2"), e(1)) == e(3));
  CHECK(poly_dual_apply(diagonal({q(3)}), P("t - 3"), e(1)).is_zero());
  CHECK(poly_dual_apply(backward_shift(), Poly(Field::Q), f).is_zero());
}

TEST_CASE("pairing examples") {
  CHECK(pairing(e(1), e(1)) == q(1));
  CHECK(pairing(e(1), e(2)) == q(0));
  CHECK(pairing(vec({{1, q(2)}, {4, q(3)}}), vec({{4, q(1, 3)}})) == q(1));
}

TEST_CASE("duality identity, linearity and multiplicativity on random instances") {
  Rng rng(42);
  for (const auto& T : zoo()) {
    for (int k = 0; k < 20; ++k) {
      FinSuppVec f = rng.vec(Field::Q, 10, 4), g = rng.vec(Field::Q, 10, 4), u = rng.vec(Field::Q, 20, 6);
      FinSuppVec tf = dual_apply(T, f);
      CHECK(pairing(tf, u) == pairing(f, apply_prefix(T, u, f.is_zero() ? 0 : f.last_index())));
      Scalar a = rng.scalar(Field::Q), b = rng.scalar(Field::Q);
      CHECK(dual_apply(T, a * f + b * g) == a * tf + b * dual_apply(T, g));
      Poly p = rng.poly(Field::Q, 3), r = rng.poly(Field::Q, 3);
      CHECK(poly_dual_apply(T, p * r, f) == poly_dual_apply(T, p, poly_dual_apply(T, r, f)));
    }
  }
}

TEST_CASE("direct_sum interleaves residue classes") {
  auto T = backward_shift(), S = diagonal();
  auto sum = OperatorSpec::direct_sum({T, S});
  Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    FinSuppVec f = rng.vec(Field::Q, 8, 4);
    CHECK(dual_apply(sum, embed_part(f, 2, 0)) == embed_part(dual_apply(T, f), 2, 0));
    CHECK(dual_apply(sum, embed_part(f, 2, 1)) == embed_part(dual_apply(S, f), 2, 1));
  }
  CHECK(embed_part(e(1), 2, 0) == e(1));
  CHECK(embed_part(e(1), 2, 1) == e(2));
  CHECK(embed_part(e(3), 3, 2) == e(9));
}

TEST_CASE("operators over Q(i)") {
  auto T = OperatorSpec::diagonal(PeriodicSeq({}, {qi(0, 1)}));
  CHECK(poly_dual_apply(T, Poly::parse("t^2 + 1", Field::Qi), e(1, Field::Qi)).is_zero());
  CHECK_THROWS_AS(OperatorSpec::sum({T, backward_shift()}), FieldMismatch);
  CHECK_THROWS_AS(dual_apply(T, e(1)), FieldMismatch);
}

TEST_CASE("parse_operator accepts the documented grammar") {
  auto T = parse_operator_text(R"({"field":"Q","op":{"kind":"backward_shift","weights":{"head":[],"period":["1"]}}})");
  for (Index n = 1; n < 20; ++n) CHECK(T.row(n) == vec({{n + 1, q(1)}}));

  auto B = parse_operator_text(R"({"field":"Q","op":{"kind":"banded","diagonals":[
      {"offset":1,"entries":{"period":["1"]}},{"offset":2,"entries":{"head":["3"],"period":["1/2"]}}]}})");
  CHECK(B.row(1) == vec({{2, q(1)}, {3, q(3)}}));
  CHECK(B.row(4) == vec({{5, q(1)}, {6, q(1, 2)}}));

  auto F = parse_operator_text(R"({"field":"Q","op":{"kind":"finite_block","matrix":[["1","2"],["0","1"]],
      "tail":{"kind":"backward_shift","weights":{"period":["1"]}}}})");
  for (const auto& [c, v] : F.row(1)) CHECK(c <= 2);

  auto C = parse_operator_text(R"({"field":"Qi","op":{"kind":"scale","scalar":{"re":"0","im":"1"},
      "op":{"kind":"poly","coeffs":["1","0","1"],"op":{"kind":"direct_sum","parts":[
        {"kind":"diagonal","entries":{"period":["2"]}},
        {"kind":"compose","factors":[{"kind":"forward_shift","weights":{"period":["1"]}}]},
        {"kind":"sum","terms":[{"kind":"diagonal","entries":{"period":["1"]}}]}]}}}})");
  CHECK(C.field() == Field::Qi);
  CHECK(C.row(1) == FinSuppVec(Field::Qi, {{1, qi(0, 5)}}));
}

TEST_CASE("operator documents round-trip through JSON") {
  for (const auto& T : zoo()) {
    auto doc = operator_to_json(T);
    auto back = parse_operator(doc);
    CHECK(operator_to_json(back) == doc);
    for (Index n = 1; n <= 12; ++n) CHECK(back.row(n) == T.row(n));
  }
}

TEST_CASE("parse_operator rejects malformed documents with a path") {
  auto path_of = [](const char* text) {
    try {
      parse_operator_text(text);
    } catch (const ParseError& e) {
      return e.path();
    }
    return std::string("no error");
  };
  CHECK(path_of(R"({"field":"Q","op":{"kind":"diagonal","entries":{"head":["1"],"period":[]}}})") ==
        "$.op.entries.period");
  CHECK(path_of(R"({"field":"Q","op":{"kind":"finite_block","matrix":[["1","2"]],
      "tail":{"kind":"diagonal","entries":{"period":["1"]}}}})") == "$.op.matrix[0]");
  CHECK(path_of(R"({"field":"Q","op":{"kind":"sum","terms":[{"kind":"diagonal","entries":{"period":[{"re":"1","im":"1"}]}}]}})") ==
        "$.op.terms[0].entries.period[0]");
  CHECK(path_of(R"({"field":"R","op":{}})") == "$.field");
  CHECK(path_of(R"({"field":"Q","op":{"kind":"rotate"}})") == "$.op.kind");
  CHECK(path_of(R"({"field":"Q","op":{"kind":"scale","scalar":"1/0","op":{"kind":"diagonal","entries":{"period":["1"]}}}})") ==
        "$.op.scalar");
  CHECK(path_of("not json") == "$");
}

TEST_CASE("FinSuppVec documents") {
  auto v = finsupp_from_json(json::parse(R"([[1,"2"],[4,"-1/3"]])"), Field::Q);
  CHECK(v == vec({{1, q(2)}, {4, q(-1, 3)}}));
  CHECK(finsupp_to_json(v) == json::parse(R"([[1,"2"],[4,"-1/3"]])"));
  CHECK_THROWS_AS(finsupp_from_json(json::parse(R"([[2,"1"],[1,"1"]])"), Field::Q), ParseError);
  CHECK_THROWS_AS(finsupp_from_json(json::parse(R"([[0,"1"]])"), Field::Q), ParseError);
  CHECK(finsupp_from_json(json::parse(R"([[3,"0"]])"), Field::Q).is_zero());
}
