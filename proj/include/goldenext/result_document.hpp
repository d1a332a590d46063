#pragma once

#include <string>
#include <utility>
#include <vector>

namespace goldenext {

inline constexpr const char* kToolVersion = "1.0.0";

// Machine-readable record of one CLI invocation.  Every value is kept as the
// exact string that was printed, so a document survives a JSON round trip
// byte for byte and can be diffed against a rerun.
struct ResultDocument {
    std::string command;
    std::string tool_version = kToolVersion;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::pair<std::string, std::string>> outputs;

    void add_parameter(std::string key, std::string value);
    void add_output(std::string key, std::string value);

    // Two-space indented JSON with insertion order preserved, trailing newline.
    std::string to_json() const;
    static ResultDocument from_json(const std::string& text);

    bool operator==(const ResultDocument&) const = default;
};

}  // namespace goldenext
