#pragma once

#include <string>

#include "json.hpp"
#include "weakmix/finsupp.hpp"
#include "weakmix/operator.hpp"
#include "weakmix/ratfunc.hpp"

namespace weakmix {

using json = nlohmann::json;

// Every parse function throws ParseError with a JSON-path-like location.

/// "a/b" for Q, {"re":"a/b","im":"c/d"} for Q(i).
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, Field field, const std::string& path = "$");

/// Coefficient array, lowest degree first.
json poly_to_json(const Poly& p);
/// Accepts a coefficient array or the human text form.
Poly poly_from_json(const json& j, Field field, const std::string& path = "$");

json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j, Field field, const std::string& path = "$");

/// [[index, SCALAR], ...] sorted by index.
json finsupp_to_json(const FinSuppVec& v);
FinSuppVec finsupp_from_json(const json& j, Field field, const std::string& path = "$");

json seq_to_json(const PeriodicSeq& s);
PeriodicSeq seq_from_json(const json& j, Field field, const std::string& path);

/// {"field":"Q"|"Qi","op":EXPR}
json operator_to_json(const OperatorSpec& op);
OperatorSpec parse_operator(const json& doc);
OperatorSpec parse_operator_text(const std::string& text);

}  // namespace weakmix
