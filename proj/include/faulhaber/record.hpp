#pragma once

// Line-delimited structured output. Key order is fixed at insertion, and
// every exact number is carried as a string.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "faulhaber/integrality.hpp"

namespace faulhaber {

using Json = nlohmann::ordered_json;

struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  Json result = Json::object();
  std::vector<std::pair<std::string, std::string>> meta;

  Json to_json() const;
  static OutputRecord from_json(const Json& j);

  /// One line, no trailing newline.
  std::string serialize() const;
  /// Throws DomainError on malformed input.
  static OutputRecord parse(std::string_view line);

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

Json verdict_to_json(const Verdict& v);

}  // namespace faulhaber
