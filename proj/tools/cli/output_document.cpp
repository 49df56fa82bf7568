#include "cli/output_document.hpp"

#include "residuum/error.hpp"

namespace residuum::cli {

nlohmann::json to_json(const OutputDocument& doc) {
  return nlohmann::json{
      {"command", doc.command},
      {"parameters", doc.parameters},
      {"results", doc.results},
      {"tool_version", doc.tool_version},
  };
}

OutputDocument from_json(const nlohmann::json& j) {
  try {
    OutputDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.parameters = j.at("parameters");
    doc.results = j.at("results");
    doc.tool_version = j.at("tool_version").get<std::string>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed output document: ") + e.what());
  }
}

std::string serialize(const OutputDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

OutputDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  return from_json(j);
}

}  // namespace residuum::cli
