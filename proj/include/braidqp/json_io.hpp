#pragma once

#include <json.hpp>

#include "braidqp/garside.hpp"
#include "braidqp/quasipositivity.hpp"

namespace braidqp {

/// {"delta_power": int, "factors": [[int,...], ...]} with each factor
/// spelled as its canonical word.
nlohmann::json to_json(const NormalForm& nf);

/// [{"conjugator": "<word>", "generator": int}, ...]
nlohmann::json to_json(const Witness& w);

/// {"quasipositive": bool|"unknown", "k": int, "states_explored": int}
/// plus "witness" when one exists.
nlohmann::json to_json(const Verdict& v);

Witness witness_from_json(const nlohmann::json& j, int n);

}  // namespace braidqp
