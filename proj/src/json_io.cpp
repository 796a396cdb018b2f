#include "weakmix/json_io.hpp"

#include "weakmix/error.hpp"

namespace weakmix {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path, msg);
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

const json& array_member(const json& j, const char* key, const std::string& path) {
  const json& a = member(j, key, path);
  if (!a.is_array()) fail(path + "." + key, "expected an array");
  return a;
}

template <class F>
auto rethrow_at(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (!e.path().empty()) throw;
    fail(path, e.what());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  } catch (const FieldMismatch& e) {
    fail(path, e.what());
  }
}

}  // namespace

json scalar_to_json(const Scalar& s) {
  if (s.field() == Field::Q) return s.to_string();
  return {{"re", rational_to_string(s.re())}, {"im", rational_to_string(s.im())}};
}

Scalar scalar_from_json(const json& j, Field field, const std::string& path) {
  return rethrow_at(path, [&] {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), field);
    if (j.is_number_integer()) return Scalar::from_int(field, j.get<long>());
    if (j.is_object()) {
      if (field != Field::Qi) fail(path, "complex scalar in a Q document");
      auto part = [&](const char* key) {
        const json& v = member(j, key, path);
        if (!v.is_string()) fail(path + "." + key, "expected a rational string");
        return parse_rational(v.get<std::string>());
      };
      return Scalar(field, part("re"), part("im"));
    }
    fail(path, "expected a scalar");
  });
}

json poly_to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(scalar_to_json(c));
  return a;
}

Poly poly_from_json(const json& j, Field field, const std::string& path) {
  if (j.is_string()) return rethrow_at(path, [&] { return Poly::parse(j.get<std::string>(), field); });
  if (!j.is_array()) fail(path, "expected a coefficient array or polynomial text");
  std::vector<Scalar> c;
  for (std::size_t k = 0; k < j.size(); ++k)
    c.push_back(scalar_from_json(j[k], field, path + "[" + std::to_string(k) + "]"));
  return Poly(field, std::move(c));
}

json ratfunc_to_json(const RatFunc& f) {
  return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFunc ratfunc_from_json(const json& j, Field field, const std::string& path) {
  Poly num = poly_from_json(member(j, "num", path), field, path + ".num");
  Poly den = poly_from_json(member(j, "den", path), field, path + ".den");
  if (den.is_zero()) fail(path + ".den", "zero denominator");
  return RatFunc(std::move(num), std::move(den));
}

json finsupp_to_json(const FinSuppVec& v) {
  json a = json::array();
  for (const auto& [n, s] : v) a.push_back(json::array({n, scalar_to_json(s)}));
  return a;
}

FinSuppVec finsupp_from_json(const json& j, Field field, const std::string& path) {
  if (!j.is_array()) fail(path, "expected [[index, scalar], ...]");
  std::vector<FinSuppVec::Entry> e;
  Index last = 0;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "[" + std::to_string(k) + "]";
    const json& item = j[k];
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer())
      fail(p, "expected [index, scalar]");
    const long n = item[0].get<long>();
    if (n < 1) fail(p, "indices start at 1");
    if (static_cast<Index>(n) <= last) fail(p, "indices must be strictly increasing");
    last = static_cast<Index>(n);
    e.emplace_back(last, scalar_from_json(item[1], field, p + "[1]"));
  }
  return FinSuppVec(field, std::move(e));
}

json seq_to_json(const PeriodicSeq& s) {
  json head = json::array(), period = json::array();
  for (const auto& x : s.head()) head.push_back(scalar_to_json(x));
  for (const auto& x : s.period()) period.push_back(scalar_to_json(x));
  return {{"head", head}, {"period", period}};
}

PeriodicSeq seq_from_json(const json& j, Field field, const std::string& path) {
  auto list = [&](const char* key, bool required) {
    std::vector<Scalar> out;
    if (!required && j.is_object() && !j.contains(key)) return out;
    const json& a = array_member(j, key, path);
    for (std::size_t k = 0; k < a.size(); ++k)
      out.push_back(scalar_from_json(a[k], field, path + "." + key + "[" + std::to_string(k) + "]"));
    return out;
  };
  std::vector<Scalar> head = list("head", false);
  std::vector<Scalar> period = list("period", true);
  if (period.empty()) fail(path + ".period", "empty period");
  return PeriodicSeq(std::move(head), std::move(period));
}

namespace {

OperatorSpec parse_expr(const json& j, Field field, const std::string& path);

std::vector<OperatorSpec> parse_list(const json& j, const char* key, Field field,
                                     const std::string& path) {
  const json& a = array_member(j, key, path);
  if (a.empty()) fail(path + "." + key, "must not be empty");
  std::vector<OperatorSpec> out;
  for (std::size_t k = 0; k < a.size(); ++k)
    out.push_back(parse_expr(a[k], field, path + "." + key + "[" + std::to_string(k) + "]"));
  return out;
}

OperatorSpec parse_expr(const json& j, Field field, const std::string& path) {
  const json& kind_j = member(j, "kind", path);
  if (!kind_j.is_string()) fail(path + ".kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "backward_shift" || kind == "forward_shift") {
    PeriodicSeq w = seq_from_json(member(j, "weights", path), field, path + ".weights");
    return kind == "backward_shift" ? OperatorSpec::backward_shift(std::move(w))
                                    : OperatorSpec::forward_shift(std::move(w));
  }
  if (kind == "diagonal")
    return OperatorSpec::diagonal(seq_from_json(member(j, "entries", path), field, path + ".entries"));
  if (kind == "banded") {
    const json& d = array_member(j, "diagonals", path);
    if (d.empty()) fail(path + ".diagonals", "must not be empty");
    std::vector<Band> bands;
    for (std::size_t k = 0; k < d.size(); ++k) {
      const std::string p = path + ".diagonals[" + std::to_string(k) + "]";
      const json& off = member(d[k], "offset", p);
      if (!off.is_number_integer()) fail(p + ".offset", "expected an integer");
      bands.push_back({off.get<long>(), seq_from_json(member(d[k], "entries", p), field, p + ".entries")});
    }
    return OperatorSpec::banded(std::move(bands));
  }
  if (kind == "finite_block") {
    const json& m = array_member(j, "matrix", path);
    if (m.empty()) fail(path + ".matrix", "must not be empty");
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < m.size(); ++r) {
      const std::string p = path + ".matrix[" + std::to_string(r) + "]";
      if (!m[r].is_array() || m[r].size() != m.size()) fail(p, "matrix must be square");
      std::vector<Scalar> row;
      for (std::size_t c = 0; c < m[r].size(); ++c)
        row.push_back(scalar_from_json(m[r][c], field, p + "[" + std::to_string(c) + "]"));
      rows.push_back(std::move(row));
    }
    OperatorSpec tail = parse_expr(member(j, "tail", path), field, path + ".tail");
    return OperatorSpec::finite_block(std::move(rows), std::move(tail));
  }
  if (kind == "sum") return OperatorSpec::sum(parse_list(j, "terms", field, path));
  if (kind == "compose") return OperatorSpec::compose(parse_list(j, "factors", field, path));
  if (kind == "direct_sum") return OperatorSpec::direct_sum(parse_list(j, "parts", field, path));
  if (kind == "scale") {
    Scalar s = scalar_from_json(member(j, "scalar", path), field, path + ".scalar");
    return OperatorSpec::scale(s, parse_expr(member(j, "op", path), field, path + ".op"));
  }
  if (kind == "poly") {
    const json& c = array_member(j, "coeffs", path);
    if (c.empty()) fail(path + ".coeffs", "must not be empty");
    std::vector<Scalar> coeffs;
    for (std::size_t k = 0; k < c.size(); ++k)
      coeffs.push_back(scalar_from_json(c[k], field, path + ".coeffs[" + std::to_string(k) + "]"));
    return OperatorSpec::poly_of(std::move(coeffs), parse_expr(member(j, "op", path), field, path + ".op"));
  }
  fail(path + ".kind", "unknown operator kind '" + kind + "'");
}

json expr_to_json(const OperatorSpec& op) {
  const OperatorNode& n = op.node();
  json j = {{"kind", op_kind_name(n.kind)}};
  auto list = [](const std::vector<OperatorSpec>& ops) {
    json a = json::array();
    for (const auto& o : ops) a.push_back(expr_to_json(o));
    return a;
  };
  switch (n.kind) {
    case OpKind::BackwardShift:
    case OpKind::ForwardShift:
      j["weights"] = seq_to_json(n.seq[0]);
      break;
    case OpKind::Diagonal:
      j["entries"] = seq_to_json(n.seq[0]);
      break;
    case OpKind::Banded: {
      json d = json::array();
      for (const auto& b : n.bands) d.push_back({{"offset", b.offset}, {"entries", seq_to_json(b.entries)}});
      j["diagonals"] = d;
      break;
    }
    case OpKind::FiniteBlock: {
      json m = json::array();
      for (const auto& r : n.matrix) {
        json row = json::array();
        for (const auto& s : r) row.push_back(scalar_to_json(s));
        m.push_back(row);
      }
      j["matrix"] = m;
      j["tail"] = expr_to_json(n.children[0]);
      break;
    }
    case OpKind::Sum: j["terms"] = list(n.children); break;
    case OpKind::Compose: j["factors"] = list(n.children); break;
    case OpKind::DirectSum: j["parts"] = list(n.children); break;
    case OpKind::Scale:
      j["scalar"] = scalar_to_json(n.coeffs[0]);
      j["op"] = expr_to_json(n.children[0]);
      break;
    case OpKind::PolyOf: {
      json c = json::array();
      for (const auto& s : n.coeffs) c.push_back(scalar_to_json(s));
      j["coeffs"] = c;
      j["op"] = expr_to_json(n.children[0]);
      break;
    }
  }
  return j;
}

}  // namespace

json operator_to_json(const OperatorSpec& op) {
  return {{"field", field_name(op.field())}, {"op", expr_to_json(op)}};
}

OperatorSpec parse_operator(const json& doc) {
  const json& f = member(doc, "field", "$");
  if (!f.is_string()) fail("$.field", "expected \"Q\" or \"Qi\"");
  const Field field = rethrow_at("$.field", [&] { return parse_field(f.get<std::string>()); });
  return parse_expr(member(doc, "op", "$"), field, "$.op");
}

OperatorSpec parse_operator_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("$", std::string("invalid JSON: ") + e.what());
  }
  return parse_operator(doc);
}

}  // namespace weakmix
