// weakmix: classify row-finite operators on omega and emit checkable certificates.
//
// Exit status: 0 definitive result, 1 input error, 2 UNKNOWN within the caps,
// 3 certificate failed verification.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "weakmix/bounds.hpp"
#include "weakmix/certificate.hpp"
#include "weakmix/error.hpp"
#include "weakmix/json_io.hpp"
#include "weakmix/witness.hpp"

using namespace weakmix;

namespace {

constexpr int kDefinitive = 0;
constexpr int kInputError = 1;
constexpr int kUnknown = 2;
constexpr int kRejected = 3;

struct Caps {
  std::size_t support = 8;
  std::size_t degree = 12;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path, e.what());
  }
}

/// Accepts a bare array or {"functionals": [...]}.
std::vector<FinSuppVec> read_functionals(const std::string& path, Field f) {
  json doc = read_json(path);
  if (doc.is_object() && doc.contains("functionals"))
    return finsupp_list_from_json(doc["functionals"], f, "$.functionals");
  return finsupp_list_from_json(doc, f);
}

/// Accepts a bare array of cylinders or {"targets": [...]}.
std::vector<AffineCylinder> read_targets(const std::string& path, Field f) {
  json doc = read_json(path);
  std::string base = "$";
  if (doc.is_object() && doc.contains("targets")) {
    doc = doc["targets"];
    base = "$.targets";
  }
  if (!doc.is_array()) throw ParseError(base, "expected an array of cylinders");
  std::vector<AffineCylinder> out;
  for (std::size_t k = 0; k < doc.size(); ++k)
    out.push_back(cylinder_from_json(doc[k], f, base + "[" + std::to_string(k) + "]"));
  return out;
}

class Runner {
public:
  std::string out_path;
  Caps caps;

  template <class Fn>
  int run(Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
      auto [doc, code] = body();
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      doc["timing_ms"] = ms.count();
      emit(doc);
      return code;
    } catch (const ParseError& e) {
      std::cerr << "error: " << e.path() << ": " << e.what() << "\n";
    } catch (const FieldMismatch& e) {
      std::cerr << "error: field mismatch: " << e.what() << "\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kInputError;
  }

  json with_caps(json doc, bool support = true) const {
    json c = {{"degree_cap", caps.degree}};
    if (support) c["support_cap"] = caps.support;
    doc["caps"] = c;
    return doc;
  }

private:
  void emit(const json& doc) const {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
};

json unknown_doc(const OperatorSpec& T, const std::string& reason) {
  return make_certificate("unknown", T, json{{"reason", reason}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify weak mixing or find torsion for row-finite operators on omega"};
  app.require_subcommand(1);
  Runner runner;

  auto add_common = [&](CLI::App* sub, bool support) {
    sub->add_option("--degree-cap", runner.caps.degree, "largest polynomial degree searched")
        ->capture_default_str();
    if (support)
      sub->add_option("--support-cap", runner.caps.support, "number of coordinate functionals swept")
          ->capture_default_str();
    sub->add_option("-o,--out", runner.out_path, "write the certificate here instead of stdout");
  };

  std::string op_file, fn_file, basis_file, x_file, source_file, target_file, cert_file, poly_text;

  auto* classify_cmd = app.add_subcommand("classify", "NOT_TRANSITIVE, MIXING_CERTIFIED_UP_TO or UNKNOWN");
  classify_cmd->add_option("operator", op_file)->required();
  add_common(classify_cmd, true);

  auto* relation_cmd = app.add_subcommand("relation", "search a polynomial relation among functionals");
  relation_cmd->add_option("operator", op_file)->required();
  relation_cmd->add_option("functionals", fn_file)->required();
  add_common(relation_cmd, false);

  auto* independence_cmd = app.add_subcommand("independence", "greedy maximal T'-independent subset");
  independence_cmd->add_option("operator", op_file)->required();
  independence_cmd->add_option("functionals", fn_file)->required();
  add_common(independence_cmd, false);

  auto* represent_cmd = app.add_subcommand("represent", "rational coordinates of x over an independent set");
  represent_cmd->add_option("operator", op_file)->required();
  represent_cmd->add_option("basis", basis_file)->required();
  represent_cmd->add_option("x", x_file, "file holding one functional")->required();
  add_common(represent_cmd, false);

  auto* bound_cmd = app.add_subcommand("bound", "degree bound m(L) for the span of the functionals");
  bound_cmd->add_option("operator", op_file)->required();
  bound_cmd->add_option("functionals", fn_file)->required();
  bound_cmd->add_option("--basis", basis_file, "use this independent set instead of the greedy one");
  add_common(bound_cmd, false);

  auto* witness_cmd = app.add_subcommand("witness", "solve for u with u in U and p(T)u in V");
  witness_cmd->add_option("operator", op_file)->required();
  witness_cmd->add_option("source", source_file)->required();
  witness_cmd->add_option("target", target_file)->required();
  witness_cmd->add_option("--poly", poly_text, "polynomial such as \"t^3 - 2*t + 1\"; default t^k at the threshold");
  add_common(witness_cmd, false);

  auto* schedule_cmd = app.add_subcommand("schedule", "one u visiting every target at increasing powers");
  schedule_cmd->add_option("operator", op_file)->required();
  schedule_cmd->add_option("source", source_file)->required();
  schedule_cmd->add_option("targets", target_file)->required();
  add_common(schedule_cmd, false);

  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate without searching");
  verify_cmd->add_option("certificate", cert_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  auto load_operator = [&] { return parse_operator(read_json(op_file)); };

  if (classify_cmd->parsed()) {
    return runner.run([&] {
      const auto T = load_operator();
      const auto v = classify(T, runner.caps.support, runner.caps.degree);
      const int code = v.verdict == Verdict::Unknown ? kUnknown : kDefinitive;
      return std::pair{runner.with_caps(make_certificate("classify", T, to_json(v))), code};
    });
  }

  if (relation_cmd->parsed()) {
    return runner.run([&] {
      const auto T = load_operator();
      const auto xs = read_functionals(fn_file, T.field());
      auto res = search_relation(T, xs, runner.caps.degree);
      if (auto* s = std::get_if<Syzygy>(&res))
        return std::pair{runner.with_caps(make_certificate("syzygy", T, to_json(*s)), false), kDefinitive};
      return std::pair{
          runner.with_caps(make_certificate("independence", T, to_json(std::get<IndependenceReport>(res))), false),
          kUnknown};
    });
  }

  if (independence_cmd->parsed()) {
    return runner.run([&] {
      const auto T = load_operator();
      const auto xs = read_functionals(fn_file, T.field());
      const auto g = greedy_independent_subset(T, xs, runner.caps.degree);
      const auto report = std::get<IndependenceReport>(search_relation(T, g.basis, runner.caps.degree));
      return std::pair{runner.with_caps(make_certificate("independent_subset", T, to_json(g, xs, report)), false),
                       kDefinitive};
    });
  }

  if (represent_cmd->parsed()) {
    return runner.run([&] {
      const auto T = load_operator();
      const auto basis = read_functionals(basis_file, T.field());
      const auto x = finsupp_from_json(read_json(x_file), T.field());
      if (auto r = represent(T, basis, x, runner.caps.degree))
        return std::pair{runner.with_caps(make_certificate("representation", T, to_json(*r)), false), kDefinitive};
      return std::pair{runner.with_caps(unknown_doc(T, "no representation over the basis within the degree cap"), false),
                       kUnknown};
    });
  }

  if (bound_cmd->parsed()) {
    return runner.run([&] {
      const auto T = load_operator();
      const auto xs = read_functionals(fn_file, T.field());
      const std::size_t cap = runner.caps.degree;
      auto torsion = torsion_in_span(T, xs, cap);
      if (auto* c = std::get_if<TorsionCertificate>(&torsion)) {
        std::cerr << "error: the span has torsion; annihilator " << c->annihilator.to_string() << "\n";
        return std::pair{runner.with_caps(make_certificate("torsion", T, to_json(*c)), false), kInputError};
      }
      if (auto* u = std::get_if<Unknown>(&torsion))
        return std::pair{runner.with_caps(unknown_doc(T, u->reason), false), kUnknown};
      std::variant<BoundReport, Unknown> res = Unknown{};
      if (basis_file.empty()) {
        auto r = m_of_l(T, xs, cap);
        if (auto* b = std::get_if<BoundReport>(&r)) res = *b;
        else if (auto* u = std::get_if<Unknown>(&r)) res = *u;
        else res = Unknown{"torsion appeared at the representation stage"};
      } else {
        res = m_of_l_with_basis(T, xs, read_functionals(basis_file, T.field()), cap);
      }
      if (auto* u = std::get_if<Unknown>(&res))
        return std::pair{runner.with_caps(unknown_doc(T, u->reason), false), kUnknown};
      json body = to_json(std::get<BoundReport>(res));
      body["no_torsion"] = to_json(std::get<NoTorsionReport>(torsion));
      return std::pair{runner.with_caps(make_certificate("bound", T, body), false), kDefinitive};
    });
  }

  if (witness_cmd->parsed()) {
    return runner.run([&] {
      const auto T = load_operator();
      const auto src = cylinder_from_json(read_json(source_file), T.field());
      const auto tgt = cylinder_from_json(read_json(target_file), T.field());
      json extra;
      Poly p(T.field());
      if (!poly_text.empty()) {
        p = Poly::parse(poly_text, T.field());
      } else {
        auto th = mixing_threshold(T, src, tgt, runner.caps.degree);
        if (auto* c = std::get_if<TorsionCertificate>(&th)) {
          std::cerr << "error: the constraint span has torsion; give --poly explicitly\n";
          return std::pair{runner.with_caps(make_certificate("torsion", T, to_json(*c)), false), kInputError};
        }
        if (auto* u = std::get_if<Unknown>(&th))
          return std::pair{runner.with_caps(unknown_doc(T, u->reason), false), kUnknown};
        const long k = std::get<Threshold>(th).k;
        p = Poly::monomial(Scalar::one(T.field()), k);
        extra["threshold"] = k;
      }
      auto res = witness(T, src, tgt, p);
      json doc = std::holds_alternative<Witness>(res)
                     ? make_certificate("witness", T, to_json(T, std::get<Witness>(res)))
                     : make_certificate("infeasible", T, to_json(std::get<Infeasible>(res)));
      if (extra.contains("threshold")) doc["threshold"] = extra["threshold"];
      return std::pair{runner.with_caps(doc, false), kDefinitive};
    });
  }

  if (schedule_cmd->parsed()) {
    return runner.run([&] {
      const auto T = load_operator();
      const auto src = cylinder_from_json(read_json(source_file), T.field());
      const auto targets = read_targets(target_file, T.field());
      auto res = schedule_orbit(T, src, targets, runner.caps.degree);
      if (auto* u = std::get_if<Unknown>(&res))
        return std::pair{runner.with_caps(unknown_doc(T, u->reason), false), kUnknown};
      return std::pair{runner.with_caps(make_certificate("schedule", T, to_json(T, std::get<VisitSchedule>(res))), false),
                       kDefinitive};
    });
  }

  // verify
  try {
    const auto outcome = verify_certificate(read_json(cert_file));
    std::cout << outcome.kind << ": " << (outcome.ok ? "OK" : "FAILED") << ": " << outcome.message << "\n";
    return outcome.ok ? kDefinitive : kRejected;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.path() << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
