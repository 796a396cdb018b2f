#pragma once

#include <string>

#include "weakmix/json_io.hpp"
#include "weakmix/witness.hpp"

namespace weakmix {

// Certificate documents carry a "kind" tag, the operator document under
// "operator", the caps they depend on and every piece of exact data a
// checker needs. `verify_certificate` re-checks identities only.

json to_json(const Syzygy& s);
json to_json(const IndependenceReport& r);
json to_json(const Representation& r);
json to_json(const TorsionCertificate& c);
json to_json(const NoTorsionReport& r);
json to_json(const ClassifyVerdict& v);
json to_json(const GreedyResult& g, const std::vector<FinSuppVec>& xs, const IndependenceReport& basis_report);
json to_json(const BoundReport& r);
json to_json(const OperatorSpec& T, const Witness& w);
json to_json(const Infeasible& w);
json to_json(const OperatorSpec& T, const VisitSchedule& s);
json to_json(const AffineCylinder& c);
json to_json(const RatFuncVec& v);
json to_json(GradedDegree d);

/// Wraps a certificate body with its kind and operator.
json make_certificate(const std::string& kind, const OperatorSpec& T, json body);

AffineCylinder cylinder_from_json(const json& j, Field field, const std::string& path = "$");
Representation representation_from_json(const json& j, Field field, const std::string& path = "$");
IndependenceReport independence_from_json(const json& j, Field field, const std::string& path = "$");
TorsionCertificate torsion_from_json(const json& j, Field field, const std::string& path = "$");
NoTorsionReport no_torsion_from_json(const json& j, Field field, const std::string& path = "$");
GradedDegree degree_from_json(const json& j, const std::string& path = "$");
std::vector<FinSuppVec> finsupp_list_from_json(const json& j, Field field, const std::string& path = "$");

struct VerifyOutcome {
  bool ok = false;
  std::string kind;
  std::string message;  // first failing identity when !ok
};

/// Re-checks any certificate document with searches disabled. Throws
/// ParseError on malformed documents.
VerifyOutcome verify_certificate(const json& doc);

}  // namespace weakmix
