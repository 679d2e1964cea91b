#include "braidqp/json_io.hpp"

namespace braidqp {

nlohmann::json to_json(const NormalForm& nf) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : nf.factors)
    factors.push_back(word_from_simple(f).letters);
  return nlohmann::json{{"delta_power", nf.delta_power}, {"factors", std::move(factors)}};
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json bands = nlohmann::json::array();
  for (const Band& band : w.bands)
    bands.push_back({{"conjugator", render_word(band.conjugator)},
                     {"generator", band.generator}});
  return bands;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json out;
  switch (v.result) {
    case Quasipositivity::yes: out["quasipositive"] = true; break;
    case Quasipositivity::no: out["quasipositive"] = false; break;
    case Quasipositivity::unknown: out["quasipositive"] = "unknown"; break;
  }
  out["k"] = v.k;
  out["states_explored"] = v.states_explored;
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

Witness witness_from_json(const nlohmann::json& j, int n) {
  if (!j.is_array()) throw SyntaxError("witness must be an array of bands");
  Witness w{n, {}};
  for (const auto& item : j) {
    if (!item.contains("conjugator") || !item.contains("generator"))
      throw SyntaxError("band needs 'conjugator' and 'generator'");
    int gen = item.at("generator").get<int>();
    if (gen < 1 || gen > n) throw RangeError("band generator index out of range");
    w.bands.push_back(Band{parse_word(item.at("conjugator").get<std::string>(), n), gen});
  }
  return w;
}

}  // namespace braidqp
