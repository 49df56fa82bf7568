#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace residuum::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Machine-readable result of one command. Keys serialize sorted, so the
/// same document always produces the same bytes.
struct OutputDocument {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::string tool_version{kToolVersion};

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

nlohmann::json to_json(const OutputDocument& doc);
OutputDocument from_json(const nlohmann::json& j);

/// Two-space indented JSON with a trailing newline.
std::string serialize(const OutputDocument& doc);

/// Throws ParseError on malformed input.
OutputDocument parse_document(std::string_view text);

}  // namespace residuum::cli
