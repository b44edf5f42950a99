#include "faulhaber/record.hpp"

#include <type_traits>

namespace faulhaber {

namespace {

Json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Json out = Json::object();
  for (const auto& [key, value] : pairs) out[key] = value;
  return out;
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(const Json& j,
                                                                 std::string_view field) {
  if (!j.is_object()) throw DomainError("record field '" + std::string(field) + "' is not an object");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) {
      throw DomainError("record field '" + std::string(field) + "." + key + "' is not a string");
    }
    out.emplace_back(key, value.get<std::string>());
  }
  return out;
}

}  // namespace

Json OutputRecord::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["inputs"] = pairs_to_json(inputs);
  j["result"] = result;
  j["meta"] = pairs_to_json(meta);
  return j;
}

OutputRecord OutputRecord::from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("record is not an object");
  for (const char* key : {"command", "inputs", "result", "meta"}) {
    if (!j.contains(key)) throw DomainError(std::string("record lacks '") + key + "'");
  }
  if (!j["command"].is_string()) throw DomainError("record field 'command' is not a string");
  OutputRecord r;
  r.command = j["command"].get<std::string>();
  r.inputs = pairs_from_json(j["inputs"], "inputs");
  r.result = j["result"];
  r.meta = pairs_from_json(j["meta"], "meta");
  return r;
}

std::string OutputRecord::serialize() const { return to_json().dump(); }

OutputRecord OutputRecord::parse(std::string_view line) {
  Json j = Json::parse(line, nullptr, false);
  if (j.is_discarded()) throw DomainError("malformed record line");
  return from_json(j);
}

Json verdict_to_json(const Verdict& v) {
  Json j = Json::object();
  j["integral"] = v.integral;
  j["rule"] = std::string(to_string(v.rule));
  Json w = Json::object();
  std::visit(
      [&w](const auto& obstruction) {
        using T = std::decay_t<decltype(obstruction)>;
        if constexpr (std::is_same_v<T, NEven>) {
          w["n_even"] = true;
        } else if constexpr (std::is_same_v<T, NMod4IsTwo>) {
          w["n_mod_4"] = "2";
        } else if constexpr (std::is_same_v<T, SharedPrimes>) {
          Json primes = Json::array();
          for (auto p : obstruction.primes) primes.push_back(std::to_string(p));
          w["primes"] = primes;
        }
      },
      v.witness);
  j["witness"] = w;
  return j;
}

}  // namespace faulhaber
