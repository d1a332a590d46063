#include "goldenext/result_document.hpp"

#include <json.hpp>

namespace goldenext {

using ordered_json = nlohmann::ordered_json;

void ResultDocument::add_parameter(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
}

void ResultDocument::add_output(std::string key, std::string value) {
    outputs.emplace_back(std::move(key), std::move(value));
}

std::string ResultDocument::to_json() const {
    ordered_json doc;
    doc["command"] = command;
    doc["tool_version"] = tool_version;
    doc["parameters"] = ordered_json::object();
    for (const auto& [key, value] : parameters) doc["parameters"][key] = value;
    doc["outputs"] = ordered_json::object();
    for (const auto& [key, value] : outputs) doc["outputs"][key] = value;
    return doc.dump(2) + "\n";
}

ResultDocument ResultDocument::from_json(const std::string& text) {
    const ordered_json doc = ordered_json::parse(text);
    ResultDocument out;
    out.command = doc.at("command").get<std::string>();
    out.tool_version = doc.at("tool_version").get<std::string>();
    for (const auto& [key, value] : doc.at("parameters").items()) {
        out.parameters.emplace_back(key, value.get<std::string>());
    }
    for (const auto& [key, value] : doc.at("outputs").items()) {
        out.outputs.emplace_back(key, value.get<std::string>());
    }
    return out;
}

}  // namespace goldenext
